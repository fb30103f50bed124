#!/usr/bin/env python3
"""Generate the bundled FCIDUMP fixtures and their metadata sidecars.

Computes STO-3G integrals (McMurchie-Davidson), runs RHF, transforms the
integrals to the MO basis, writes an FCIDUMP per molecule, and records the
FCI ground-state energy (ladder-operator construction in the particle-number
sector, independent of any qubit encoding) plus the RHF energy in a JSON
sidecar. Run from the repository root:

    python3 scripts/gen_fixtures.py

Outputs land in fixtures/. The script is deterministic; fixtures are
committed and never regenerated by the build.
"""

import itertools
import json
import math
import os

import numpy as np
from scipy.special import hyp1f1

ANGSTROM_TO_BOHR = 1.8897259886

# STO-3G exponents / contraction coefficients (Basis Set Exchange values).
STO3G = {
    "H": [("s", [3.425250914, 0.6239137298, 0.1688554040],
           [0.1543289673, 0.5353281423, 0.4446345422])],
    "Li": [("s", [16.11957475, 2.936200663, 0.7946504870],
            [0.1543289673, 0.5353281423, 0.4446345422]),
           ("s", [0.6362897469, 0.1478600533, 0.04808867840],
            [-0.09996722919, 0.3995128261, 0.7001154689]),
           ("p", [0.6362897469, 0.1478600533, 0.04808867840],
            [0.1559162750, 0.6076837186, 0.3919573931])],
}

CHARGE = {"H": 1, "Li": 3}


def boys(n, x):
    return hyp1f1(n + 0.5, n + 1.5, -x) / (2.0 * n + 1.0)


def hermite_coefs(l1, l2, a, b, ab_dist):
    """E_t^{ij} expansion table for one Cartesian direction."""
    p = a + b
    mu = a * b / p
    E = {}
    E[(0, 0, 0)] = math.exp(-mu * ab_dist * ab_dist)
    x_pa = -b * ab_dist / p  # P - A with A at origin of the pair axis
    x_pb = a * ab_dist / p   # P - B
    for i in range(l1 + 1):
        for j in range(l2 + 1):
            if i == 0 and j == 0:
                continue
            for t in range(i + j + 1):
                if j == 0:
                    val = (E.get((i - 1, j, t - 1), 0.0) / (2 * p)
                           + x_pa * E.get((i - 1, j, t), 0.0)
                           + (t + 1) * E.get((i - 1, j, t + 1), 0.0))
                else:
                    val = (E.get((i, j - 1, t - 1), 0.0) / (2 * p)
                           + x_pb * E.get((i, j - 1, t), 0.0)
                           + (t + 1) * E.get((i, j - 1, t + 1), 0.0))
                E[(i, j, t)] = val
    return E


def hermite_e(l1, l2, t, a, b, dist):
    return hermite_coefs(l1, l2, a, b, dist).get((l1, l2, t), 0.0)


def overlap_prim(a, la, A, b, lb, B):
    p = a + b
    s = (math.pi / p) ** 1.5
    for d in range(3):
        s *= hermite_e(la[d], lb[d], 0, a, b, A[d] - B[d])
    return s


def kinetic_prim(a, la, A, b, lb, B):
    # T = -1/2 nabla^2 acting on the ket, composed per direction.
    def s1d(i, j, d):
        return hermite_e(i, j, 0, a, b, A[d] - B[d])

    def t1d(i, j, d):
        term = b * (2 * j + 1) * s1d(i, j, d) - 2 * b * b * s1d(i, j + 2, d)
        if j >= 2:
            term -= 0.5 * j * (j - 1) * s1d(i, j - 2, d)
        return term

    pref = (math.pi / (a + b)) ** 1.5
    out = 0.0
    for d in range(3):
        f = 1.0
        for e in range(3):
            f *= t1d(la[e], lb[e], e) if e == d else s1d(la[e], lb[e], e)
        out += f
    return pref * out


def hermite_r(t, u, v, n, p, PC, memo):
    key = (t, u, v, n)
    if key in memo:
        return memo[key]
    if t == u == v == 0:
        val = (-2.0 * p) ** n * boys(n, p * np.dot(PC, PC))
    elif t > 0:
        val = PC[0] * hermite_r(t - 1, u, v, n + 1, p, PC, memo)
        if t > 1:
            val += (t - 1) * hermite_r(t - 2, u, v, n + 1, p, PC, memo)
    elif u > 0:
        val = PC[1] * hermite_r(t, u - 1, v, n + 1, p, PC, memo)
        if u > 1:
            val += (u - 1) * hermite_r(t, u - 2, v, n + 1, p, PC, memo)
    else:
        val = PC[2] * hermite_r(t, u, v - 1, n + 1, p, PC, memo)
        if v > 1:
            val += (v - 1) * hermite_r(t, u, v - 2, n + 1, p, PC, memo)
    memo[key] = val
    return val


def nuclear_prim(a, la, A, b, lb, B, C):
    p = a + b
    P = (a * np.asarray(A) + b * np.asarray(B)) / p
    PC = P - np.asarray(C)
    Ex = hermite_coefs(la[0], lb[0], a, b, A[0] - B[0])
    Ey = hermite_coefs(la[1], lb[1], a, b, A[1] - B[1])
    Ez = hermite_coefs(la[2], lb[2], a, b, A[2] - B[2])
    memo = {}
    out = 0.0
    for t in range(la[0] + lb[0] + 1):
        for u in range(la[1] + lb[1] + 1):
            for v in range(la[2] + lb[2] + 1):
                out += (Ex.get((la[0], lb[0], t), 0.0)
                        * Ey.get((la[1], lb[1], u), 0.0)
                        * Ez.get((la[2], lb[2], v), 0.0)
                        * hermite_r(t, u, v, 0, p, PC, memo))
    return 2.0 * math.pi / p * out


def eri_prim(a, la, A, b, lb, B, c, lc, C, d, ld, D):
    p = a + b
    q = c + d
    alpha = p * q / (p + q)
    P = (a * np.asarray(A) + b * np.asarray(B)) / p
    Q = (c * np.asarray(C) + d * np.asarray(D)) / q
    PQ = P - Q
    E1 = [hermite_coefs(la[d0], lb[d0], a, b, A[d0] - B[d0]) for d0 in range(3)]
    E2 = [hermite_coefs(lc[d0], ld[d0], c, d, C[d0] - D[d0]) for d0 in range(3)]
    memo = {}
    out = 0.0
    for t in range(la[0] + lb[0] + 1):
        for u in range(la[1] + lb[1] + 1):
            for v in range(la[2] + lb[2] + 1):
                e1 = (E1[0].get((la[0], lb[0], t), 0.0)
                      * E1[1].get((la[1], lb[1], u), 0.0)
                      * E1[2].get((la[2], lb[2], v), 0.0))
                if e1 == 0.0:
                    continue
                for tt in range(lc[0] + ld[0] + 1):
                    for uu in range(lc[1] + ld[1] + 1):
                        for vv in range(lc[2] + ld[2] + 1):
                            e2 = (E2[0].get((lc[0], ld[0], tt), 0.0)
                                  * E2[1].get((lc[1], ld[1], uu), 0.0)
                                  * E2[2].get((lc[2], ld[2], vv), 0.0))
                            if e2 == 0.0:
                                continue
                            sign = (-1.0) ** (tt + uu + vv)
                            out += (e1 * e2 * sign
                                    * hermite_r(t + tt, u + uu, v + vv, 0,
                                                alpha, PQ, memo))
    return out * 2.0 * math.pi ** 2.5 / (p * q * math.sqrt(p + q))


def prim_norm(a, l):
    lx, ly, lz = l
    def df(n):  # (2n-1)!!
        out = 1
        for k in range(2 * n - 1, 0, -2):
            out *= k
        return out
    return ((2 * a / math.pi) ** 0.75
            * (4 * a) ** ((lx + ly + lz) / 2.0)
            / math.sqrt(df(lx) * df(ly) * df(lz)))


class Ao:
    def __init__(self, center, l, exps, coefs):
        self.center = np.asarray(center, dtype=float)
        self.l = l
        self.exps = list(exps)
        self.coefs = [c * prim_norm(a, l) for a, c in zip(exps, coefs)]
        s = 0.0
        for ai, ci in zip(self.exps, self.coefs):
            for aj, cj in zip(self.exps, self.coefs):
                s += ci * cj * overlap_prim(ai, l, self.center, aj, l, self.center)
        self.coefs = [c / math.sqrt(s) for c in self.coefs]


def build_basis(atoms):
    aos = []
    for sym, xyz in atoms:
        for shell, exps, coefs in STO3G[sym]:
            if shell == "s":
                aos.append(Ao(xyz, (0, 0, 0), exps, coefs))
            else:
                for l in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]:
                    aos.append(Ao(xyz, l, exps, coefs))
    return aos


def contracted(fn, f1, f2, *rest):
    out = 0.0
    for a1, c1 in zip(f1.exps, f1.coefs):
        for a2, c2 in zip(f2.exps, f2.coefs):
            if rest:
                f3, f4 = rest
                for a3, c3 in zip(f3.exps, f3.coefs):
                    for a4, c4 in zip(f4.exps, f4.coefs):
                        out += c1 * c2 * c3 * c4 * fn(
                            a1, f1.l, f1.center, a2, f2.l, f2.center,
                            a3, f3.l, f3.center, a4, f4.l, f4.center)
            else:
                out += c1 * c2 * fn(a1, f1.l, f1.center, a2, f2.l, f2.center)
    return out


def ao_integrals(atoms):
    aos = build_basis(atoms)
    n = len(aos)
    S = np.zeros((n, n))
    T = np.zeros((n, n))
    V = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1):
            S[i, j] = S[j, i] = contracted(overlap_prim, aos[i], aos[j])
            T[i, j] = T[j, i] = contracted(kinetic_prim, aos[i], aos[j])
            v = 0.0
            for sym, xyz in atoms:
                v -= CHARGE[sym] * contracted(
                    lambda a, la, A, b, lb, B: nuclear_prim(a, la, A, b, lb, B, xyz),
                    aos[i], aos[j])
            V[i, j] = V[j, i] = v
    eri = np.zeros((n, n, n, n))
    done = {}
    for i, j, k, l in itertools.product(range(n), repeat=4):
        key = tuple(sorted([tuple(sorted([i, j])), tuple(sorted([k, l]))]))
        if key not in done:
            done[key] = contracted(eri_prim, aos[i], aos[j], aos[k], aos[l])
        val = done[key]
        eri[i, j, k, l] = val
    return S, T + V, eri


def nuclear_repulsion(atoms):
    out = 0.0
    for (s1, r1), (s2, r2) in itertools.combinations(atoms, 2):
        out += CHARGE[s1] * CHARGE[s2] / np.linalg.norm(np.asarray(r1) - np.asarray(r2))
    return out


def rhf(S, hcore, eri, n_elec, max_iter=500, tol=1e-12):
    n_occ = n_elec // 2
    evals, evecs = np.linalg.eigh(S)
    X = evecs @ np.diag(evals ** -0.5) @ evecs.T
    F = hcore.copy()
    D = None
    energy = 0.0
    for _ in range(max_iter):
        Fp = X.T @ F @ X
        eps, Cp = np.linalg.eigh(Fp)
        C = X @ Cp
        Cocc = C[:, :n_occ]
        D_new = 2.0 * Cocc @ Cocc.T
        D = D_new if D is None else 0.5 * (D_new + D)
        J = np.einsum("pqrs,rs->pq", eri, D)
        K = np.einsum("prqs,rs->pq", eri, D)
        F = hcore + J - 0.5 * K
        e_new = 0.5 * np.sum(D * (hcore + F))
        if abs(e_new - energy) < tol and np.allclose(D, D_new, atol=1e-10):
            energy = e_new
            D = D_new
            break
        energy = e_new
    # final canonical orbitals from the converged Fock matrix
    Fp = X.T @ F @ X
    eps, Cp = np.linalg.eigh(Fp)
    C = X @ Cp
    return energy, C, eps


def mo_transform(hcore, eri, C):
    h_mo = C.T @ hcore @ C
    eri_mo = np.einsum("pqrs,pi,qj,rk,sl->ijkl", eri, C, C, C, C, optimize=True)
    return h_mo, eri_mo


def fci_ground_energy(h_mo, eri_mo, n_orb, n_elec, e_nuc):
    """Minimum eigenvalue over the fixed-particle-number, Sz=0 sector.

    Spin orbital 2i = (spatial i, alpha), 2i+1 = (spatial i, beta). Matrix
    elements come from explicit ladder-operator application on occupation
    bitmasks, so no Slater-Condon sign rules are hand-coded.
    """
    n_so = 2 * n_orb
    na = n_elec // 2

    def apply_ops(mask, ops):
        # ops: list of (index, dagger), applied right-to-left
        sign = 1
        for idx, dag in reversed(ops):
            bit = 1 << idx
            occupied = mask & bit
            if dag == bool(occupied):
                return 0, 0
            if bin(mask & (bit - 1)).count("1") % 2:
                sign = -sign
            mask ^= bit
        return sign, mask

    dets = []
    for alpha in itertools.combinations(range(n_orb), na):
        for beta in itertools.combinations(range(n_orb), n_elec - na):
            mask = 0
            for p in alpha:
                mask |= 1 << (2 * p)
            for p in beta:
                mask |= 1 << (2 * p + 1)
            dets.append(mask)
    index = {m: i for i, m in enumerate(dets)}
    dim = len(dets)
    H = np.zeros((dim, dim))

    terms = []
    for p, q in itertools.product(range(n_orb), repeat=2):
        if abs(h_mo[p, q]) > 1e-14:
            for s in range(2):
                terms.append((h_mo[p, q], [(2 * p + s, True), (2 * q + s, False)]))
    for i, j, k, l in itertools.product(range(n_orb), repeat=4):
        val = eri_mo[i, j, k, l]
        if abs(val) > 1e-14:
            for s1 in range(2):
                for s2 in range(2):
                    terms.append((0.5 * val,
                                  [(2 * i + s1, True), (2 * k + s2, True),
                                   (2 * l + s2, False), (2 * j + s1, False)]))

    for col, mask in enumerate(dets):
        for coef, ops in terms:
            sign, new_mask = apply_ops(mask, ops)
            if sign:
                H[index[new_mask], col] += sign * coef

    evals = np.linalg.eigvalsh(0.5 * (H + H.T))
    return float(evals[0] + e_nuc)


def write_fcidump(path, h_mo, eri_mo, n_orb, n_elec, e_nuc):
    with open(path, "w", newline="\n") as f:
        f.write(f"&FCI NORB={n_orb},NELEC={n_elec},MS2=0,\n")
        f.write("  ORBSYM=" + ",".join(["1"] * n_orb) + ",\n")
        f.write("  ISYM=1,\n")
        f.write(" /\n")

        def rec(val, i, j, k, l):
            f.write(f" {val: .16E} {i:4d} {j:4d} {k:4d} {l:4d}\n")

        seen = set()
        for i, j, k, l in itertools.product(range(n_orb), repeat=4):
            ij = (i, j) if i >= j else (j, i)
            kl = (k, l) if k >= l else (l, k)
            key = (ij, kl) if ij >= kl else (kl, ij)
            if key in seen:
                continue
            seen.add(key)
            (a, b), (c, d) = key
            val = eri_mo[a, b, c, d]
            if abs(val) > 1e-12:
                rec(val, a + 1, b + 1, c + 1, d + 1)
        for i in range(n_orb):
            for j in range(i + 1):
                if abs(h_mo[i, j]) > 1e-12:
                    rec(h_mo[i, j], i + 1, j + 1, 0, 0)
        rec(e_nuc, 0, 0, 0, 0)


def make(name, atoms, n_elec, out_dir):
    S, hcore, eri = ao_integrals(atoms)
    e_nuc = nuclear_repulsion(atoms)
    e_hf, C, eps = rhf(S, hcore, eri, n_elec)
    h_mo, eri_mo = mo_transform(hcore, eri, C)
    n_orb = h_mo.shape[0]
    e_fci = fci_ground_energy(h_mo, eri_mo, n_orb, n_elec, e_nuc)

    path = os.path.join(out_dir, f"{name}.fcidump")
    write_fcidump(path, h_mo, eri_mo, n_orb, n_elec, e_nuc)
    meta = {
        "molecule": name,
        "basis": "sto-3g",
        "geometry": [[sym, list(xyz / ANGSTROM_TO_BOHR)] for sym, xyz in
                     [(s, np.asarray(r)) for s, r in atoms]],
        "units": "angstrom",
        "n_spatial_orbitals": n_orb,
        "n_electrons": n_elec,
        "core_energy_ha": e_nuc,
        "hf_energy_ha": e_hf + e_nuc,
        "fci_energy_ha": e_fci,
        "orbital_energies_ha": [float(x) for x in eps],
    }
    with open(os.path.join(out_dir, f"{name}.json"), "w", newline="\n") as f:
        json.dump(meta, f, indent=2)
        f.write("\n")
    print(f"{name}: E_HF = {e_hf + e_nuc:.10f}  E_FCI = {e_fci:.10f}  "
          f"norb = {n_orb}  nelec = {n_elec}")


def main():
    out_dir = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
                           "fixtures")
    os.makedirs(out_dir, exist_ok=True)
    r_h2 = 0.735 * ANGSTROM_TO_BOHR
    make("h2_sto3g", [("H", np.zeros(3)), ("H", np.array([0.0, 0.0, r_h2]))], 2, out_dir)
    r_lih = 1.5949 * ANGSTROM_TO_BOHR
    make("lih_sto3g", [("Li", np.zeros(3)), ("H", np.array([0.0, 0.0, r_lih]))], 4, out_dir)


if __name__ == "__main__":
    main()
