#!/usr/bin/env python3
"""Regenerates the bundled code data under data/.

Produces:
  data/codes/*.json      one JSON object per code (same schema as catalog lines)
  data/starter.jsonl     small starter catalog (fixtures + headline codes)
  data/extended.jsonl    additional BCH / QR / Reed-Muller constructions
  data/wd/*.wd           exact weight distributions where enumeration is feasible

Cyclic constructions are built from scratch: GF(2^m) arithmetic, cyclotomic
cosets, minimal polynomials. Reed-Muller generator matrices are monomial
evaluation tables. Only the Python standard library is used.
"""

import json
import os
import sys

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..")
DATA = os.path.join(ROOT, "data")

# ---------------------------------------------------------------------------
# GF(2)[x] arithmetic on integer bit masks (bit i = coefficient of x^i)

def pmul(a, b):
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r

def pmod(a, m):
    dm = m.bit_length() - 1
    while a.bit_length() - 1 >= dm and a:
        a ^= m << (a.bit_length() - 1 - dm)
    return a

def pdivmod(a, b):
    q = 0
    db = b.bit_length() - 1
    while a.bit_length() - 1 >= db and a:
        s = a.bit_length() - 1 - db
        q |= 1 << s
        a ^= b << s
    return q, a

# ---------------------------------------------------------------------------
# GF(2^m) via a primitive polynomial; elements are ints < 2^m

PRIM = {3: 0b1011, 4: 0b10011, 5: 0b100101, 6: 0b1000011,
        7: 0b10001001, 8: 0b100011101, 9: 0b1000010001}

class GF2m:
    def __init__(self, m):
        self.m = m
        self.p = PRIM[m]
        self.n = (1 << m) - 1

    def mul(self, a, b):
        return pmod(pmul(a, b), self.p)

    def pow_alpha(self, e):
        r = 1
        a = 2  # alpha = x
        e %= self.n
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

def cyclotomic_coset(n, s):
    c = set()
    x = s % n
    while x not in c:
        c.add(x)
        x = (2 * x) % n
    return sorted(c)

def min_poly(field, exponents):
    """Product of (x - alpha^e) for e in exponents, as a GF(2) bit mask.

    exponents must be closed under doubling mod n for the result to be binary.
    """
    # polynomial with GF(2^m) coefficients, low degree first
    poly = [1]
    for e in exponents:
        root = field.pow_alpha(e)
        nxt = [0] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] ^= c              # x * c
            nxt[i] ^= field.mul(c, root)  # root * c (== -root in char 2)
        poly = nxt
    mask = 0
    for i, c in enumerate(poly):
        assert c in (0, 1), "coefficients not binary"
        mask |= c << i
    return mask

def bch_gen_poly(m, delta):
    """Narrow-sense BCH of length 2^m - 1 with designed distance delta."""
    n = (1 << m) - 1
    field = GF2m(m)
    cosets = []
    seen = set()
    for s in range(1, delta):
        if s % n in seen:
            continue
        c = cyclotomic_coset(n, s)
        seen.update(c)
        cosets.append(c)
    g = 1
    for c in cosets:
        g = pmul(g, min_poly(field, c))
    return g

def qr_gen_poly(m):
    """Binary quadratic residue code of length n = 2^m - 1 (2 must be a QR)."""
    n = (1 << m) - 1
    field = GF2m(m)
    residues = sorted({(x * x) % n for x in range(1, n)})
    return min_poly(field, residues)

# ---------------------------------------------------------------------------
# bit/hex helpers; coordinate 0 = MSB of the first hex char

def bits_to_hex(bits):
    out = []
    for j in range(0, len(bits), 4):
        v = 0
        for t in range(4):
            if j + t < len(bits) and bits[j + t]:
                v |= 8 >> t
        out.append("%x" % v)
    return "".join(out)

def poly_to_hex(mask, length):
    return bits_to_hex([(mask >> i) & 1 for i in range(length)])

# ---------------------------------------------------------------------------
# Reed-Muller generator matrices: rows are monomials of degree <= r
# evaluated on all 2^m points (variable i of point t is bit i of t)

def rm_rows(r, m):
    from itertools import combinations
    n = 1 << m
    rows = []
    for deg in range(r + 1):
        for vars_ in combinations(range(m), deg):
            bits = []
            for t in range(n):
                v = 1
                for i in vars_:
                    v &= (t >> i) & 1
                bits.append(v)
            rows.append(bits)
    return rows

# ---------------------------------------------------------------------------
# weight distribution by Gray-code enumeration over row masks

def enumerate_wd(row_masks, n):
    k = len(row_masks)
    counts = [0] * (n + 1)
    cw = 0
    counts[0] += 1
    for t in range(1, 1 << k):
        j = (t & -t).bit_length() - 1
        cw ^= row_masks[t.bit_length() - 1 if False else j]
        counts[cw.bit_count()] += 1
    return counts

def cyclic_row_masks(g, n):
    k = n - (g.bit_length() - 1)
    return [g << i for i in range(k)], k

def bits_row_to_mask(bits):
    m = 0
    for i, b in enumerate(bits):
        if b:
            m |= 1 << i
    return m

# ---------------------------------------------------------------------------

def write_wd(name, n, k, counts):
    path = os.path.join(DATA, "wd", name + ".wd")
    with open(path, "w") as f:
        f.write("%d %d\n" % (n, k))
        for i, c in enumerate(counts):
            if c:
                f.write("%d %d\n" % (i, c))
    return "wd/" + name + ".wd"

def code_entry(name, family, n, k, d, cyclic, construction, wd_ref=None):
    e = {"name": name, "family": family, "n": n, "k": k, "cyclic": cyclic,
         "construction": construction}
    if d is not None:
        e["d"] = d
    if wd_ref is not None:
        e["wd_ref"] = wd_ref
    return e

def main():
    os.makedirs(os.path.join(DATA, "codes"), exist_ok=True)
    os.makedirs(os.path.join(DATA, "wd"), exist_ok=True)

    starter = []
    extended = []

    def cyclic_code(name, family, n, g, d, wd=False, dest=None):
        k = n - (g.bit_length() - 1)
        q, rem = pdivmod((1 << n) | 1, g)
        assert rem == 0, "%s: gen poly does not divide x^n+1" % name
        ref = None
        if wd:
            masks, _ = cyclic_row_masks(g, n)
            counts = enumerate_wd(masks, n)
            assert sum(counts) == 1 << k
            if d is not None:
                mn = min(i for i in range(1, n + 1) if counts[i])
                assert mn == d, "%s: enumerated d=%d, claimed %d" % (name, mn, d)
            ref = write_wd(name, n, k, counts)
        e = code_entry(name, family, n, k, d, True,
                       {"gen_poly": poly_to_hex(g, g.bit_length())}, ref)
        (dest if dest is not None else starter).append(e)
        return e

    def matrix_code(name, family, rows_bits, d, wd=False, wd_ref=None,
                    dest=None):
        n = len(rows_bits[0])
        k = len(rows_bits)
        ref = wd_ref
        if wd:
            masks = [bits_row_to_mask(r) for r in rows_bits]
            counts = enumerate_wd(masks, n)
            assert sum(counts) == 1 << k
            if d is not None:
                mn = min(i for i in range(1, n + 1) if counts[i])
                assert mn == d, "%s: enumerated d=%d, claimed %d" % (name, mn, d)
            ref = write_wd(name, n, k, counts)
        e = code_entry(name, family, n, k, d, False,
                       {"gen_rows": [bits_to_hex(r) for r in rows_bits]}, ref)
        (dest if dest is not None else starter).append(e)
        return e

    # --- starter fixtures -------------------------------------------------
    cyclic_code("rep_3_1", "repetition", 3, 0b111, 3)
    cyclic_code("parity_3_2", "parity", 3, 0b11, 2)
    cyclic_code("hamming_7_4", "hamming", 7, 0b1011, 3, wd=True)
    cyclic_code("simplex_7_3", "simplex", 7, 0b10111, 4)
    matrix_code("ext_hamming_8_4", "reed-muller", rm_rows(1, 3), 4, wd=True)
    cyclic_code("hamming_15_11", "hamming", 15, 0b10011, 3)
    cyclic_code("bch_15_5", "bch", 15, bch_gen_poly(4, 7), 7, wd=True)

    # Golay [23,12,7]: g = x^11+x^10+x^6+x^5+x^4+x^2+1
    golay_g = (1 << 11) | (1 << 10) | (1 << 6) | (1 << 5) | (1 << 4) | (1 << 2) | 1
    cyclic_code("golay_23_12", "golay", 23, golay_g, 7, wd=True)
    # its dual [23,11,8]: reciprocal of h(x) = (x^23+1)/g(x)
    h, rem = pdivmod((1 << 23) | 1, golay_g)
    assert rem == 0
    hrev = 0
    dh = h.bit_length() - 1
    for i in range(dh + 1):
        if (h >> i) & 1:
            hrev |= 1 << (dh - i)
    cyclic_code("golay_dual_23_11", "golay-dual", 23, hrev, 8, wd=True)

    # RM(1,9) = [512,10,256]
    matrix_code("rm_1_9", "reed-muller", rm_rows(1, 9), 256, wd=True)
    # RM(3,8) = [256,93,32] and RM(3,9) = [512,130,64]: weight distributions
    # are published research data and are not recomputable here; wd files are
    # referenced but not bundled.
    matrix_code("rm_3_8", "reed-muller", rm_rows(3, 8), 32, wd_ref="wd/rm_3_8.wd")
    matrix_code("rm_3_9", "reed-muller", rm_rows(3, 9), 64, wd_ref="wd/rm_3_9.wd")

    # --- extended: Table-style BCH / QR / RM constructions ----------------
    matrix_code("rm_4_8", "reed-muller", rm_rows(4, 8), 16,
                wd_ref="wd/rm_4_8.wd", dest=extended)
    matrix_code("rm_5_9", "reed-muller", rm_rows(5, 9), 16,
                wd_ref="wd/rm_5_9.wd", dest=extended)

    # narrow-sense BCH codes; claimed d values from standard tables
    bch_wanted = {  # (n, k) -> claimed true minimum distance
        (127, 50): 27, (127, 78): 15, (127, 85): 13, (127, 29): 43,
        (255, 37): 91, (255, 47): 85, (255, 215): 11, (255, 29): 95,
        (511, 31): 219,
    }
    for m in (7, 8, 9):
        n = (1 << m) - 1
        seen_k = set()
        for delta in range(3, n, 2):
            g = bch_gen_poly(m, delta)
            k = n - (g.bit_length() - 1)
            if k <= 0:
                break
            if (n, k) in bch_wanted and k not in seen_k:
                seen_k.add(k)
                d = bch_wanted[(n, k)]
                cyclic_code("bch_%d_%d_%d" % (n, k, d), "bch", n, g, d,
                            dest=extended)

    # quadratic residue [127,64,19]
    qg = qr_gen_poly(7)
    assert qg.bit_length() - 1 == 63
    cyclic_code("qr_127_64_19", "quadratic-residue", 127, qg, 19, dest=extended)

    # --- emit -------------------------------------------------------------
    for e in starter + extended:
        with open(os.path.join(DATA, "codes", e["name"] + ".json"), "w") as f:
            json.dump(e, f)
            f.write("\n")
    with open(os.path.join(DATA, "starter.jsonl"), "w") as f:
        for e in starter:
            f.write(json.dumps(e) + "\n")
    with open(os.path.join(DATA, "extended.jsonl"), "w") as f:
        for e in extended:
            f.write(json.dumps(e) + "\n")

    print("starter entries: %d" % len(starter))
    print("extended entries: %d" % len(extended))
    for e in extended:
        print("  [%d,%d,%s] %s" % (e["n"], e["k"], e.get("d"), e["name"]))

if __name__ == "__main__":
    sys.exit(main())
