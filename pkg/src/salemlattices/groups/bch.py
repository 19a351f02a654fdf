"""Cross-check of the closed-form l(t) l(t') product against the truncated
exponential-product expansion in the class-3 nilpotent subalgebra.

Two independent routes to the same element, both exact rational:

* the closed formula h(-1/3 alpha(t,t') (t + t'/2)-flat, 0, alpha(t,t')/2)
  followed by l(t + t');
* exp(t) exp(t') = exp(t + t' + [t,t']/2 + [t - t', [t,t']]/12), re-split
  into h(.) l(t + t') with one more central commutator step.

A mismatch is an implementation bug in the structure constants, so it is
reported as a fatal inconsistency.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import InternalInconsistency
from ..intervals import as_fraction
from .twocentre import DqExact


@dataclass(frozen=True)
class BchCheck:
    t1: tuple
    t2: tuple
    closed_form: tuple  # (z-pair, s)
    truncated_series: tuple
    equal: bool

    def to_json(self):
        def enc(part):
            (z1, z2), s = part
            return {"z": [str(z1), str(z2)], "s": str(s)}

        return {
            "t": [str(x) for x in self.t1],
            "t_dot": [str(x) for x in self.t2],
            "closed_form": enc(self.closed_form),
            "truncated_series": enc(self.truncated_series),
            "equal": self.equal,
        }


def bch_crosscheck_Ell(group: DqExact, t1, t2, strict: bool = True) -> BchCheck:
    """Compare the two routes for l(t1) l(t2); exact equality required."""
    t1 = (as_fraction(t1[0]), as_fraction(t1[1]))
    t2 = (as_fraction(t2[0]), as_fraction(t2[1]))

    # route 1: the closed formula
    z_cf, _, s_cf = group._ll(t1, t2)

    # route 2: truncated series plus the central re-splitting step
    c = group.alpha(t1, t2)  # [t, t'] in s-units
    diff = (t1[0] - t2[0], t1[1] - t2[1])
    tf_diff = group.tflat(diff)
    # [t - t', [t, t']] = -c * (t - t')-flat, weight 1/12
    z_series = (-c / 12 * tf_diff[0], -c / 12 * tf_diff[1])
    s_series = c / 2
    total = (t1[0] + t2[0], t1[1] + t2[1])
    tf_total = group.tflat(total)
    # split exp(z + s + T) = h(z - s/2 * T-flat, 0, s) l(T)
    z_series = (
        z_series[0] - s_series / 2 * tf_total[0],
        z_series[1] - s_series / 2 * tf_total[1],
    )

    equal = z_cf == z_series and s_cf == s_series
    if strict and not equal:
        raise InternalInconsistency(
            f"closed form and truncated series disagree at t={t1}, t'={t2}: "
            f"{(z_cf, s_cf)} vs {(z_series, s_series)}"
        )
    return BchCheck(t1, t2, (z_cf, s_cf), (z_series, s_series), equal)
