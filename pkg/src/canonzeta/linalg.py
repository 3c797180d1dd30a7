"""Exact sparse Gaussian elimination over the rationals."""

from .exactnum import Q, to_q


class LinSystem:
    """Rows are sparse dicts column -> rational; columns are arbitrary hashable labels."""

    def __init__(self, columns=None):
        self.columns = list(columns) if columns is not None else []
        self._index = {c: i for i, c in enumerate(self.columns)}
        self.rows = []

    def column(self, label):
        i = self._index.get(label)
        if i is None:
            i = len(self.columns)
            self.columns.append(label)
            self._index[label] = i
        return i

    def add_row(self, row):
        """Add an equation sum row[label] * unknown[label] = 0."""
        r = {}
        for label, c in row.items():
            c = to_q(c)
            if c:
                r[self.column(label)] = c
        if r:
            self.rows.append(r)

    def echelon(self):
        """Reduced row echelon form: dict pivot column -> normalized row."""
        pivots = {}
        for row in self.rows:
            row = dict(row)
            # eliminate existing pivots
            changed = True
            while changed:
                changed = False
                for col in sorted(set(row) & set(pivots)):
                    c = row.get(col)
                    if c:
                        for k, v in pivots[col].items():
                            nv = row.get(k, 0) - c * v
                            if nv:
                                row[k] = nv
                            else:
                                row.pop(k, None)
                        changed = True
            if not row:
                continue
            col = min(row)
            inv = 1 / row[col]
            row = {k: v * inv for k, v in row.items()}
            # back-substitute into existing pivots
            for pc, prow in pivots.items():
                c = prow.get(col)
                if c:
                    for k, v in row.items():
                        nv = prow.get(k, 0) - c * v
                        if nv:
                            prow[k] = nv
                        else:
                            prow.pop(k, None)
            pivots[col] = row
        return pivots

    def rank(self):
        return len(self.echelon())

    def nullspace(self, ncols=None):
        """Basis of the solution space, as dicts label -> rational."""
        n = len(self.columns) if ncols is None else ncols
        pivots = self.echelon()
        free = [c for c in range(n) if c not in pivots]
        basis = []
        for fcol in free:
            vec = {self.columns[fcol]: Q(1)}
            for pcol, prow in pivots.items():
                c = prow.get(fcol)
                if c:
                    vec[self.columns[pcol]] = -c
            basis.append(vec)
        return basis


def solve_particular(rows, rhs):
    """Solve sum rows[i][label] * u[label] = rhs[i]; return one solution or None."""
    sys = LinSystem()
    const = object()
    for row in rows:
        for label in row:
            sys.column(label)
    for row, b in zip(rows, rhs):
        r = dict(row)
        if b:
            r[const] = -to_q(b)
        sys.add_row(r)
    ci = sys.column(const)
    piv = sys.echelon()
    if ci in piv and len(piv[ci]) == 1:
        return None
    # set free unknowns to zero; the constant column stands for the value 1
    sol = {}
    for pcol, prow in piv.items():
        if pcol == ci:
            return None
        sol[sys.columns[pcol]] = -prow.get(ci, 0)
    return sol
