from ddhooks.v1.resources import Record

COMPARISON_COLUMNS = ["t", "n", "x", "exact", "estimate", "log_ratio"]


class ComparisonRow(Record):
    @property
    def t(self) -> int:
        return self.get('t')

    @property
    def n(self) -> int:
        return self.get('n')

    @property
    def x(self) -> str:
        return self.get('x')

    @property
    def exact(self) -> str:
        return self.get('exact')

    @property
    def estimate(self) -> str:
        return self.get('estimate')

    @property
    def log_ratio(self) -> str:
        return self.get('log_ratio')
