from fractions import Fraction

from ddhooks.v1 import *
from ddhooks.v1.resources import Settings, render_csv, columns_of

if __name__ == "__main__":
    # Precision and worker count also come from DDHOOKS_PRECISION / DDHOOKS_WORKERS
    workbench = Workbench(Settings(precision=40, workers=2))

    # Hook lengths of (5,4,1) and its doubled distinct partition (6,6,4,2,2)
    for parts in ([5, 4, 1], [6, 6, 4, 2, 2]):
        row, = workbench.hooks(parts, 3)
        print(row["partition"], "hooks:", row["hooks"], "n_3 =", row["n_t"], "above diagonal:", row["nhat_t"])

    # Littlewood decomposition of (8,7,7,4,4,2) for t = 3
    row, = workbench.decompose([8, 7, 7, 4, 4, 2], 3)
    print("core:", row["core"], "quotient:", row["quotient"])

    # 3-hooks over all partitions of 10, then over the doubled distinct partitions of 20
    rows = workbench.dist(3, [10], PartitionClass.all(), StatisticTag.NT)
    print(render_csv(rows, columns_of(rows)))
    rows = workbench.dist(3, [20], PartitionClass.doubled_distinct(), StatisticTag.NT, summary=True)
    print("mean:", rows[0]["mean"], "variance:", rows[0]["variance"])

    # Exact dd_2(2n; 9/10) against the main term
    for row in workbench.asymp(2, [100, 200, 400], Fraction(9, 10)):
        print("n = {}: log(exact / estimate) = {}".format(row.n, row.log_ratio))

    # Generating functions against enumeration, two processes
    for row in workbench.verify(["gf", "parity"], 16, 3):
        print("{sweep} t={t}: {checks} checks, {mismatches} mismatches".format(**row))
