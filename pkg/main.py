from src.adapters.input_adapters.cli import run

if __name__ == "__main__":
    run()
