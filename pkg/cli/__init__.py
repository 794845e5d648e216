from cli.main import VERBS, main

__all__ = ['VERBS', 'main']
