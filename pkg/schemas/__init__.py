from schemas.reports import DiagramResult, FiniteMapReport, GroupoidVerdict, LinearMapReport, Report, Verdict

__all__ = [
    'DiagramResult',
    'FiniteMapReport',
    'GroupoidVerdict',
    'LinearMapReport',
    'Report',
    'Verdict',
]
