#!/usr/bin/env python3
"""Reference runs of the elasticity descent/ascent, written independently of
the C++ sources. Regenerate with:

    python3 tests/golden/make_optimizer_golden.py > tests/golden/optimizer_runs.json
"""
import json
import math

MASK64 = (1 << 64) - 1


class MT19937_64:
    """Plain transcription of the 64-bit Mersenne Twister reference code."""

    NN, MM = 312, 156
    MATRIX_A = 0xB5026F5AA96619E9
    UM, LM = 0xFFFFFFFF80000000, 0x7FFFFFFF

    def __init__(self, seed):
        self.mt = [0] * self.NN
        self.mt[0] = seed & MASK64
        for i in range(1, self.NN):
            prev = self.mt[i - 1]
            self.mt[i] = (6364136223846793005 * (prev ^ (prev >> 62)) + i) & MASK64
        self.mti = self.NN

    def next(self):
        if self.mti >= self.NN:
            mt = self.mt
            for i in range(self.NN):
                x = (mt[i] & self.UM) | (mt[(i + 1) % self.NN] & self.LM)
                xa = x >> 1
                if x & 1:
                    xa ^= self.MATRIX_A
                mt[i] = mt[(i + self.MM) % self.NN] ^ xa
            self.mti = 0
        x = self.mt[self.mti]
        self.mti += 1
        x ^= (x >> 29) & 0x5555555555555555
        x ^= (x << 17) & 0x71D67FFFEDA60000
        x ^= (x << 37) & 0xFFF7EEE000000000
        x ^= x >> 43
        return x & MASK64


def open_unit(rng):
    while True:
        x = float(rng.next() >> 11) * 2.0 ** -53
        if x > 0.0:
            return x


def initial(seed, ascent, cap):
    rng = MT19937_64(seed)
    while True:
        a = open_unit(rng)
        b = open_unit(rng)
        if not ascent or a + b < cap:
            return a, b


def run(L, K, lr, a, b, ascent, rule, cap=1.8, max_iters=1_000_000):
    ll, lk = math.log(L), math.log(K)
    step = lr if ascent else -lr
    gmax = 0.0
    iters = 0
    term = "max_iters"
    for _ in range(max_iters):
        if rule == "paper":
            ga = a * math.exp((a - 1.0) * ll + b * lk)
            gb = b * math.exp((b - 1.0) * ll + a * lk)
        else:
            c = math.exp(a * ll + b * lk)
            ga, gb = ll * c, lk * c
        gmax = max(gmax, abs(ga) + abs(gb))
        na = a + step * ga
        nb = b + step * gb
        if not na > 0.0:
            term = "boundary_alpha"
            break
        if not nb > 0.0:
            term = "boundary_beta"
            break
        if ascent and not (na + nb < cap):
            term = "cap_reached"
            break
        a, b = na, nb
        iters += 1
    obj = math.exp(0.0 + a * ll + b * lk)
    return dict(alpha=a, beta=b, objective=obj, iterations=iters,
                terminated_by=term, max_gradient=gmax)


def main():
    cases = []
    for ascent in (False, True):
        for rule in ("paper", "analytic"):
            res = run(65.0, 5.0, 0.01, 0.5, 0.5, ascent, rule)
            cases.append(dict(L=65.0, K=5.0, learning_rate=0.01, init_alpha=0.5,
                              init_beta=0.5, seed=None, ascent=ascent, mode=rule,
                              result=res))
    # Default configuration: seed 42, learning rate 0.01, paper_rule mode.
    for L, K in ((65.0, 5.0), (45.0, 15.0), (58.0, 30.0), (60.0, 40.0)):
        for ascent in (False, True):
            a, b = initial(42, ascent, 1.8)
            res = run(L, K, 0.01, a, b, ascent, "paper")
            cases.append(dict(L=L, K=K, learning_rate=0.01, init_alpha=a, init_beta=b,
                              seed=42, ascent=ascent, mode="paper", result=res))
    print(json.dumps({"cases": cases}, indent=1))


if __name__ == "__main__":
    main()
