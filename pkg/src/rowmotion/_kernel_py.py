"""Pure-Python toggle-rowmotion kernel over prime-field matrices.

Same interface as the compiled extension; used when the extension is absent
and as the reference side of the kernel benchmark.  Labels travel as a flat
list of n*d*d integers in [0, p), row-major per element in id order.
"""

from __future__ import annotations

from .errors import SingularValue

BACKEND = "pure-python"


class FpToggleEngine:
    """Toggle-mode antichain rowmotion stepper for one poset shape.

    ``up_covers``/``down_covers`` are adjacency lists, ``topo`` a linear
    extension, ``upsets[v]``/``downsets[v]`` the up-set of v in reverse
    topological order and the down-set in topological order.
    """

    def __init__(self, up_covers, down_covers, topo, upsets, downsets, d, p):
        self.n = len(up_covers)
        self.up_covers = [list(t) for t in up_covers]
        self.down_covers = [list(t) for t in down_covers]
        self.topo = list(topo)
        self.upsets = [list(t) for t in upsets]
        self.downsets = [list(t) for t in downsets]
        self.d = d
        self.p = p
        self.dd = d * d

    # -- flat d x d matrix helpers ------------------------------------

    def _mul(self, x, y):
        d, p = self.d, self.p
        out = [0] * self.dd
        for i in range(d):
            ri = i * d
            for k in range(d):
                a = x[ri + k]
                if a:
                    rk = k * d
                    for j in range(d):
                        out[ri + j] = (out[ri + j] + a * y[rk + j]) % p
        return out

    def _add(self, x, y):
        p = self.p
        return [(a + b) % p for a, b in zip(x, y)]

    def _identity(self, scalar=1):
        d = self.d
        out = [0] * self.dd
        for i in range(d):
            out[i * d + i] = scalar % self.p
        return out

    def _inv(self, x):
        d, p = self.d, self.p
        if d == 1:
            if x[0] == 0:
                return None
            return [pow(x[0], p - 2, p)]
        aug = [list(x[i * d:(i + 1) * d]) + [1 if j == i else 0 for j in range(d)]
               for i in range(d)]
        for col in range(d):
            piv = None
            for r in range(col, d):
                if aug[r][col]:
                    piv = r
                    break
            if piv is None:
                return None
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = pow(aug[col][col], p - 2, p)
            aug[col] = [v * inv % p for v in aug[col]]
            for r in range(d):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [(a - f * b) % p for a, b in zip(aug[r], aug[col])]
        out = []
        for r in range(d):
            out.extend(aug[r][d:])
        return out

    # -- rowmotion ------------------------------------------------------

    def _label(self, labels, x):
        return labels[x * self.dd:(x + 1) * self.dd]

    def step(self, labels, c):
        """One toggle pass bottom to top; returns the new flat label list."""
        labels = list(labels)
        dd = self.dd
        p = self.p
        for v in self.topo:
            up_val = self._directed_value(labels, self.upsets[v], self.up_covers, left=False)
            down_val = self._directed_value(labels, self.downsets[v], self.down_covers, left=True)
            up_inv = self._inv(up_val)
            if up_inv is None:
                raise SingularValue("singular inverse-up value", element=v)
            down_inv = self._inv(down_val)
            if down_inv is None:
                raise SingularValue("singular inverse-down value", element=v)
            new = self._mul(self._mul(up_inv, down_inv), self._label(labels, v))
            labels[v * dd:(v + 1) * dd] = [c * t % p for t in new]
        return labels

    def _directed_value(self, labels, order, covers, left):
        """Inverse transfer value at order[-1]; ``left`` multiplies the label
        on the left of the cover sum (inverse-down) instead of the right."""
        val = {}
        for u in order:
            acc = None
            for w in covers[u]:
                acc = val[w] if acc is None else self._add(acc, val[w])
            lab = self._label(labels, u)
            if acc is None:
                val[u] = lab
            elif left:
                val[u] = self._mul(lab, acc)
            else:
                val[u] = self._mul(acc, lab)
        return val[order[-1]]

    def first_return(self, labels, c, max_steps):
        """Smallest m <= max_steps with step^m(labels) == labels, else 0."""
        initial = list(labels)
        cur = initial
        for m in range(1, max_steps + 1):
            cur = self.step(cur, c)
            if cur == initial:
                return m
        return 0
