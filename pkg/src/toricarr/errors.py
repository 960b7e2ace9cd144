"""Error types with stable machine-readable categories."""


class ToricArrError(Exception):
    category = "infeasible"

    def payload(self):
        return {"category": self.category, "message": str(self)}


class ParseError(ToricArrError):
    category = "parse"


class InfeasibleError(ToricArrError):
    category = "infeasible"


class NumericError(ToricArrError):
    category = "numeric"


class CapExceededError(ToricArrError):
    category = "cap-exceeded"
