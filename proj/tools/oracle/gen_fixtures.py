#!/usr/bin/env python3
"""Generate newform coefficient fixtures with PARI/GP (via the `cypari` wheel).

This script is run once, offline; its output under fixtures/ is committed and
the C++ build never calls it.  Usage:

    pip install cypari
    python3 tools/oracle/gen_fixtures.py [--out fixtures]

For every entry of ROWS it builds the new subspace S_k^new(N, eps) with
mfinit/mfeigenbasis, sorts the Galois orbits by their absolute trace
sequences, picks the orbit at the labelled position, and writes:

  <out>/<name>.json              prime coefficients a_p (p <= bound) as exact
                                 coordinates on the multiquadratic basis
  <out>/peers/<N>_<k>_<enc>.json trace sequences of every orbit in the space

Coordinates are taken with respect to the square roots sqrt(d_i) that map to
the principal complex square roots under a complex embedding in which PARI's
character values are exp(2 pi i * chareval).  That is the same embedding the
C++ library uses for roots of unity, so eps(p) computed on the C++ side is
consistent with these coordinates.
"""

import argparse
import json
import math
import os
import sys
from fractions import Fraction

import cypari
from cypari import pari

pari.allocatemem(2 * 10**9, silent=True) if hasattr(pari, "allocatemem") else None

# (label, level, weight, encoding, field generators as printed in the table)
ROWS = [
    ("28A", 28, 2, [1, 1], [-1, 3]),
    ("35A", 35, 2, [1, 3], [10, -1]),
    ("44A", 44, 2, [1, 5], [2, -3]),
    ("57A", 57, 2, [1, 9], [2, -5]),
    ("60A", 60, 2, [0, 1, 1], [5, -1]),
    ("63A", 63, 2, [3, 1], [-2, 6]),
    ("56B", 56, 2, [1, 1, 3], [-1, 6]),
    ("77B", 77, 2, [3, 5], [10, -2]),
    ("80B", 80, 2, [1, 0, 1], [-1, 3]),
    ("92A", 92, 2, [1, 11], [-1, 14]),
    ("93D", 93, 2, [1, 5], [2, -3]),
    ("95A", 95, 2, [1, 3], [-1, 3]),
    ("95B", 95, 2, [1, 3], [-1, 3]),
    ("9A3", 9, 3, [1], [-3]),
    ("10A3", 10, 3, [0, 1], [-1]),
    ("12A3", 12, 3, [1, 0], [-3]),
    ("19B3", 19, 3, [9], [-13]),
    ("20A3", 20, 3, [0, 1], [-1]),
    ("21B3", 21, 3, [1, 2], [-3, 15]),
    ("24C3", 24, 3, [0, 1, 1], [2, -7]),
    ("100B3", 100, 3, [0, 5], [-1, 6]),
    ("12A4", 12, 4, [1, 1], [-5, 3]),
    ("27C4", 27, 4, [0], [2]),
    ("35A4", 35, 4, [1, 3], [5, -1]),
    ("36B4", 36, 4, [1, 3], [30, -2]),
    ("63B4", 63, 4, [3, 3], [-222, -2]),
    ("100D4", 100, 4, [1, 5], [11, -1, 5]),
    ("5A5", 5, 5, [1], [-1]),
    ("8B5", 8, 5, [1, 1], [-15]),
    ("15C5", 15, 5, [1, 2], [10, -26]),
    ("25C5", 25, 5, [5], [-1, 21]),
    ("64B5", 64, 5, [1, 8], [51, -1]),
    ("81D5", 81, 5, [9], [2, -3]),
    ("100B5", 100, 5, [0, 5], [-1, -69]),
    # Not a table row: rational non-CM form, used as the trivial-class control.
    ("11A", 11, 2, [0], []),
]

# Extra coefficient depth for forms whose a_p = 0 prime needs a far p-dagger.
EXTRA_BOUND = {"95B": 600}


def factor(n):
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            a = 0
            while n % p == 0:
                n //= p
                a += 1
            out.append((p, a))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def crt_lift(N, q, r):
    """Residue mod N that is r mod q and 1 mod N/q."""
    m = N // q
    for x in range(r % q, N, q):
        if x % m == 1 % m:
            return x
    raise ValueError


def smallest_generator(q):
    phi = sum(1 for a in range(1, q) if math.gcd(a, q) == 1)
    for g in range(2, q):
        if math.gcd(g, q) != 1:
            continue
        x, o = g, 1
        while x != 1:
            x = x * g % q
            o += 1
        if o == phi:
            return g
    raise ValueError


def local_slots(N):
    """List of (global residue, order of the slot) in encoding order."""
    slots = []
    for p, a in factor(N):
        q = p**a
        if p == 2:
            if a == 1:
                slots.append((crt_lift(N, q, 1), 1))
            elif a == 2:
                slots.append((crt_lift(N, q, q - 1), 2))
            else:
                slots.append((crt_lift(N, q, q - 1), 2))
                slots.append((crt_lift(N, q, 5), 2 ** (a - 2)))
        else:
            g = smallest_generator(q)
            slots.append((crt_lift(N, q, g), q // p * (p - 1)))
    return slots


def find_conrey(N, enc):
    G = pari.znstar(N, 1)
    slots = local_slots(N)
    if len(slots) != len(enc):
        raise ValueError("encoding length mismatch for N=%d" % N)
    for c in range(1, N + 1):
        if math.gcd(c, N) != 1:
            continue
        chi = pari.znconreychar(G, c)
        ok = True
        for (g, order), e in zip(slots, enc):
            r = Fraction(str(pari.chareval(G, chi, g)))
            if r * order != e:
                ok = False
                break
        if ok:
            return G, chi, c
    raise ValueError("no character with encoding %s mod %d" % (enc, N))


def char_value_exponent(G, chi, n):
    return Fraction(str(pari.chareval(G, chi, n)))


def squarefree_part(d):
    s = 1 if d > 0 else -1
    for p, a in factor(abs(d)):
        if a % 2:
            s *= p
    return s


def primes_upto(B):
    return [int(p) for p in pari.primes([2, B])]


class Orbit:
    def __init__(self, space, f, B):
        self.space = space
        self.f = f
        coefs = pari.mfcoefs(f, B)
        self.raw = [coefs[i] for i in range(B + 1)]
        self.abspol, self.abs = space.to_absolute(self.raw)
        self.degree = int(pari.poldegree(self.abspol)) if self.abspol is not None else 1
        self.t_abs = getattr(space, 't_abs', None)
        self.traces = [space.trace(self.abspol, x) for x in self.abs[1:]]


class Space:
    def __init__(self, N, k, enc):
        self.N, self.k, self.enc = N, k, enc
        self.G, self.chi, self.conrey = find_conrey(N, enc)
        self.mf = pari("mfinit([%d,%d,Mod(%d,%d)],0)" % (N, k, self.conrey, N))
        params = pari.mfparams(self.mf)
        self.cyclo = params[4]  # polynomial in t, or y - 1 style placeholder
        self.order = int(pari.charorder(self.G, self.chi))
        self.rnf_cache = {}

    def base_is_q(self):
        return self.order <= 2

    def to_absolute(self, raw):
        """Return (absolute polynomial in y or None, list of absolute polmods)."""
        relpol = None
        for x in raw:
            if x.type() == "t_POLMOD":
                relpol = x.mod()
                break
        if relpol is None:
            return None, [pari(x) for x in raw]
        var = str(pari.variable(relpol))
        if self.base_is_q() or var == "t":
            abspol = pari.subst(relpol, "t", "y") if var == "t" else relpol
            self.t_abs = pari.Mod("y", abspol) if var == "t" else None
            out = []
            for x in raw:
                lx = pari.lift(x) if x.type() == "t_POLMOD" else x
                out.append(pari.Mod(pari.subst(lx, "t", "y"), abspol))
            return abspol, out
        cyc = pari("polcyclo(%d,t)" % self.order)
        key = str(relpol)
        if key not in self.rnf_cache:
            self.rnf_cache[key] = pari.rnfinit(pari.nfinit(cyc), relpol)
        rnf = self.rnf_cache[key]
        out = []
        for x in raw:
            lx = pari.lift(x) if x.type() == "t_POLMOD" else x
            out.append(pari.rnfeltreltoabs(rnf, lx))
        abspol = pari("(r)->r.polabs")(rnf)
        out = [pari.Mod(pari.lift(v), abspol) if v.type() == "t_POLMOD" else pari.Mod(v, abspol) for v in out]
        self.t_abs = pari.Mod(pari.lift(pari.rnfeltup(rnf, pari("Mod(t, polcyclo(%d,t))" % self.order))), abspol)
        return abspol, out

    def trace(self, abspol, x):
        if abspol is None:
            return int(x)
        return int(pari.trace(x))


def evaluate(elem, abspol, root):
    if abspol is None or elem.type() != "t_POLMOD":
        return complex(float(elem), 0.0)
    v = pari.subst(pari.lift(elem), "y", root)
    return complex(float(pari.real(v)), float(pari.imag(v)))


def principal_sqrt(d):
    return complex(0.0, math.sqrt(-d)) if d < 0 else complex(math.sqrt(d), 0.0)


def build_record(space, orb, name, gens, B):
    N, k = space.N, space.k
    abspol = orb.abspol
    deg = 1 if abspol is None else int(pari.poldegree(abspol))
    if abspol is None:
        if gens:
            raise ValueError("%s: rational coefficients but field %s" % (name, gens))
        return {str(p): [fraction_str(orb.abs[p])] for p in primes_upto(B)}
    if deg != 2 ** len(gens):
        raise ValueError("%s: Hecke field degree %d, expected %d" % (name, deg, 2 ** len(gens)))
    roots = [complex(float(pari.real(r)), float(pari.imag(r)))
             for r in pari.polroots(abspol)] if abspol is not None else []
    root_gens = list(pari.polroots(abspol)) if abspol is not None else []
    ps = primes_upto(B)
    # Pick a complex embedding consistent with chi(n) = exp(2 pi i chareval).
    chosen = None
    for idx, root in enumerate(root_gens):
        good = True
        for p in ps[:40]:
            if N % p == 0:
                continue
            a = evaluate(orb.abs[p], abspol, root)
            if abs(a) < 1e-9:
                continue
            e = char_value_exponent(space.G, space.chi, p)
            eps = complex(math.cos(2 * math.pi * e), math.sin(2 * math.pi * e))
            if abs(a.conjugate() - a / eps) > 1e-6 * max(1.0, abs(a)):
                good = False
                break
        if good and space.order > 2:
            tval = evaluate(orb.t_abs, abspol, root)
            want = complex(math.cos(2 * math.pi / space.order), math.sin(2 * math.pi / space.order))
            if abs(tval - want) > 1e-9:
                good = False
        if good:
            chosen = root
            break
    if chosen is None:
        raise ValueError("%s: no complex embedding compatible with the character" % name)
    K = pari.nfinit(abspol)
    sq = []
    for d in gens:
        rs = pari.nfroots(K, pari("x^2 - (%d)" % d))
        if len(rs) != 2:
            raise ValueError("%s: sqrt(%d) not in Hecke field" % (name, d))
        want = principal_sqrt(d)
        pick = None
        for r in rs:
            rr = pari.Mod(pari.subst(pari.lift(r), "x", "y") if False else r, abspol)
            if abs(evaluate(rr, abspol, chosen) - want) < 1e-6:
                pick = rr
        if pick is None:
            raise ValueError("%s: no principal sqrt(%d)" % (name, d))
        sq.append(pick)
    basis = []
    for mask in range(2 ** len(gens)):
        b = pari.Mod(1, abspol)
        for i in range(len(gens)):
            if mask >> i & 1:
                b = b * sq[i]
        basis.append(b)
    M = pari.matconcat([pari.nfalgtobasis(K, b) for b in basis])
    Minv = pari.matsolve(M, pari.matid(len(basis)))
    coeffs = {}
    for p in ps:
        x = orb.abs[p]
        if x.type() != "t_POLMOD":
            x = pari.Mod(x, abspol)
        v = Minv * pari.nfalgtobasis(K, x)
        coeffs[str(p)] = [str(Fraction(str(v[i]))) for i in range(len(basis))]
    return coeffs


def fraction_str(x):
    return str(Fraction(str(x)))


def enc_str(enc):
    return "[" + ",".join(str(e) for e in enc) + "]"


def letter(i):
    return chr(ord("A") + i % 26) * (i // 26 + 1)


def _dump(obj, indent):
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = ['%s  %s: %s' % (pad, json.dumps(k), _dump(obj[k], indent + 1))
                 for k in sorted(obj)]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list):
        if all(not isinstance(v, (dict, list)) for v in obj):
            return "[" + ", ".join(json.dumps(v) for v in obj) + "]"
        items = [pad + "  " + _dump(v, indent + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(obj, ensure_ascii=False)


def canonical_dump(obj):
    """Sorted keys, two-space indent, scalar arrays on one line."""
    return _dump(obj, 0) + "\n"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "..", "fixtures"))
    ap.add_argument("--only", default=None)
    args = ap.parse_args()
    out = os.path.abspath(args.out)
    os.makedirs(os.path.join(out, "peers"), exist_ok=True)
    source = "PARI/GP %s via cypari %s (mfinit/mfeigenbasis)" % (
        ".".join(str(x) for x in pari.version()), cypari.__version__)
    spaces = {}
    for name, N, k, enc, gens in ROWS:
        if args.only and name not in args.only.split(","):
            continue
        B = max(100, 4 * N, EXTRA_BOUND.get(name, 0))
        key = (N, k, tuple(enc))
        space = Space(N, k, enc)
        orbits = [Orbit(space, f, B) for f in pari.mfeigenbasis(space.mf)]
        orbits.sort(key=lambda o: o.traces)
        label_letter = name[len(str(N))]
        idx = ord(label_letter) - ord("A")
        orb = orbits[idx]
        print("%s: %d orbits, degrees %s, picked degree %d" % (
            name, len(orbits), [o.degree for o in orbits], orb.degree), file=sys.stderr)
        if not bool(pari.mfisCM(orb.f) == 0):
            raise ValueError("%s is CM" % name)
        coeffs = build_record(space, orb, name, gens, B)
        rec = {
            "bound": B,
            "coeffs": coeffs,
            "eps": enc,
            "field_discs": gens,
            "level": N,
            "name": name,
            "non_cm": True,
            "source": source,
            "weight": k,
        }
        with open(os.path.join(out, name + ".json"), "w") as fh:
            fh.write(canonical_dump(rec))
        peers = {
            "eps": enc,
            "kind": "peers",
            "level": N,
            "orbits": [{"degree": o.degree, "traces": o.traces} for o in orbits],
            "source": source,
            "weight": k,
        }
        pname = "%d_%d_%s.json" % (N, k, "-".join(str(e) for e in enc))
        ppath = os.path.join(out, "peers", pname)
        if key in spaces and spaces[key] >= B:
            continue
        spaces[key] = B
        with open(ppath, "w") as fh:
            fh.write(canonical_dump(peers))


if __name__ == "__main__":
    main()
