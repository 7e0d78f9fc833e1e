"""g-invariant multiplicities and scalars on the arrows of a ribbon quiver."""

from dataclasses import dataclass

from .errors import NotGInvariant
from .field import QQ


def _spread(q, spec, default, what, convert):
    """Per-arrow values from ``None``, a constant, a per-arrow sequence or an id-keyed dict.

    Dict values are propagated along g-cycles; conflicting values raise.
    """
    n = q.num_arrows
    if spec is None:
        return [convert(default)] * n
    if isinstance(spec, dict):
        vals = [None] * n
        for key, v in spec.items():
            a = q.arrow_index[str(key)] if not isinstance(key, int) else key
            v = convert(v)
            for b in q.g_cycles[q.g_cycle_of[a]]:
                if vals[b] is not None and vals[b] != v:
                    raise NotGInvariant(
                        f"{what} takes different values on the g-cycle of {q.arrows[a]}"
                    )
                vals[b] = v
        return [convert(default) if v is None else v for v in vals]
    if isinstance(spec, (list, tuple)):
        if len(spec) != n:
            raise ValueError(f"{what} needs one value per arrow")
        return [convert(v) for v in spec]
    return [convert(spec)] * n


@dataclass(frozen=True)
class GData:
    m: tuple
    c: tuple
    field: object = QQ

    @classmethod
    def build(cls, q, m=None, c=None, field=QQ, check=True):
        mm = _spread(q, m, 1, "multiplicity", int)
        cc = _spread(q, c, 1, "scalar", field)
        if any(x < 1 for x in mm):
            raise ValueError("multiplicities must be positive")
        if any(x == 0 for x in cc):
            raise ValueError("scalars must be nonzero")
        data = cls(tuple(mm), tuple(cc), field)
        if check:
            data.check(q)
        return data

    @classmethod
    def per_g_cycle(cls, q, m_values, c_values=None, field=QQ):
        """Values listed in the order of ``q.g_cycles``."""
        m = [m_values[q.g_cycle_of[a]] for a in range(q.num_arrows)]
        if c_values is None:
            c = None
        else:
            c = [c_values[q.g_cycle_of[a]] for a in range(q.num_arrows)]
        return cls.build(q, m, c, field)

    def check(self, q):
        for name, vals in (("m", self.m), ("c", self.c)):
            for a in range(q.num_arrows):
                if vals[q.g[a]] != vals[a]:
                    raise NotGInvariant(
                        f"{name} differs on {q.arrows[a]} and g({q.arrows[a]}) = {q.arrows[q.g[a]]}"
                    )
        return self

    def mn(self, q, a):
        return self.m[a] * q.n(a)

    def is_admissible(self, q):
        return all(self.mn(q, a) >= 3 for a in range(q.num_arrows))
