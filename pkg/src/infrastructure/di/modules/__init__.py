from .repository_module import RepositoryModule
from .service_module import ServiceModule
from .use_case_module import UseCaseModule

__all__ = ["RepositoryModule", "ServiceModule", "UseCaseModule"]
