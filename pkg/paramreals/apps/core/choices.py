from model_utils import Choices

REPRESENTATIONS = Choices(
    ("cauchy", "Cauchy real"),
    ("interval", "Interval real"),
    ("irram", "iRRAM real"),
    ("string", "String function"),
    ("interval_function", "Interval function"),
    ("irram_function", "iRRAM function"),
    ("kc_function", "Kawamura-Cook function"),
)

REAL_REPRESENTATIONS = Choices(
    ("cauchy", "Cauchy real"),
    ("interval", "Interval real"),
    ("irram", "iRRAM real"),
)

EXTENSION_RULES = Choices("hold", "fail")
STRATEGIES = Choices("dag", "restart", "tree")
VERDICTS = Choices("dominated", "violated")
VALIDATION_CHECKS = Choices(
    "cauchy_bound", "consistency", "nested", "containment", "convergence", "answer_type"
)
BENCHMARKS = Choices("logistic", "modulus", "strategies", "translations")
