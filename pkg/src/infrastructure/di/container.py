from dependency_injector import containers, providers

from src.infrastructure.di.modules import (
    RepositoryModule,
    ServiceModule,
    UseCaseModule,
)


class Container(containers.DeclarativeContainer):
    """Main DI container"""

    # Configuration
    config = providers.Configuration()

    repositories = providers.Container(RepositoryModule, config=config)

    services = providers.Container(ServiceModule, config=config)

    use_cases = providers.Container(
        UseCaseModule, config=config, repositories=repositories, services=services
    )
