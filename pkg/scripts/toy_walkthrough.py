#!/usr/bin/env python3
"""Walk the whole protocol on the toy group (p=23, q=11, g=4).

Uses the hand-computable stub hash H(m, u) = (m + u) mod q and fixed
randomness, so every intermediate value below can be checked on paper.
"""

from dvsig.groupparams import TOY23
from dvsig.msghash import HashMode, raw_message
from dvsig.pv_scheme import psg, psv
from dvsig.sdvs_mr import RecoveryNonces, mr_recover_verify, mr_sign, mr_simulate
from dvsig.sdvs_saeednia import SaeedniaNonces, sds_sign, sds_simulate, sds_verify
from dvsig.udvs import SimulatorRandomness, dsg, dsv_recover, dv_simulate

STUB = HashMode.STUB


def main():
    toy = TOY23
    x_a, y_a = 3, 18  # signer
    x_b, y_b = 5, 12  # designated verifier
    m = raw_message(7, toy)

    print(f"group: p={toy.p} q={toy.q} g={toy.g}")
    print(f"signer: x_A={x_a} y_A={y_a}   verifier: x_B={x_b} y_B={y_b}   message m={m.value}")

    print("\n-- Saeednia-style strong DVS --")
    sig = sds_sign(toy, x_a, y_b, m, SaeedniaNonces(k=2, t=3), STUB)
    print(f"sign(k=2, t=3)        -> (r, s, t) = ({sig.r}, {sig.s}, {sig.t})")
    print(f"verify with x_B       -> {sds_verify(toy, y_a, x_b, m, sig, STUB)}")
    sim = sds_simulate(toy, y_a, x_b, m, 1, 2, STUB)
    print(f"simulate(s'=1, r'=2)  -> (r, s, t) = ({sim.r}, {sim.s}, {sim.t})")
    print(f"simulated verifies    -> {sds_verify(toy, y_a, x_b, m, sim, STUB)}")

    print("\n-- Lee-Chang strong DVS with message recovery --")
    sig = mr_sign(toy, x_a, y_b, m, RecoveryNonces(k1=2, k2=3), STUB)
    print(f"sign(k1=2, k2=3)      -> (t, c, r, s) = ({sig.t}, {sig.c}, {sig.r}, {sig.s})")
    print(f"recover with x_B      -> m = {mr_recover_verify(toy, y_a, x_b, sig, STUB).value}")
    sim = mr_simulate(toy, y_a, x_b, m, 2, 5, STUB)
    print(f"simulate(w1=2, w2=5)  -> (t, c, r, s) = ({sim.t}, {sim.c}, {sim.r}, {sim.s})")
    print(f"simulated recovers    -> m = {mr_recover_verify(toy, y_a, x_b, sim, STUB).value}")

    print("\n-- publicly verifiable stage + universal designation --")
    pv = psg(toy, x_a, m, RecoveryNonces(k1=2, k2=3), STUB)
    print(f"psg(k1=2, k2=3)       -> omega = ({pv.t}, {pv.c}, {pv.r}, {pv.s})")
    print(f"psv (public values)   -> m = {psv(toy, y_a, pv, STUB).value}")
    dv = dsg(toy, y_a, y_b, pv, 4, STUB)
    print(f"dsg(d=4)              -> delta = ({dv.t}, {dv.w}, {dv.r}, {dv.s}, {dv.e})")
    print(f"dsv with x_B          -> m = {dsv_recover(toy, y_a, x_b, dv, STUB).value}")
    sim = dv_simulate(toy, y_a, x_b, m, SimulatorRandomness(w1=2, w2=5, d=4), STUB)
    print(f"simulate(2, 5, d'=4)  -> delta = ({sim.t}, {sim.w}, {sim.r}, {sim.s}, {sim.e})")
    print(f"simulated recovers    -> m = {dsv_recover(toy, y_a, x_b, sim, STUB).value}")


if __name__ == "__main__":
    main()
