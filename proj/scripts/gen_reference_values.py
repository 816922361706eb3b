#!/usr/bin/env python3
"""Freeze reference values and coefficient tables for the test suite.

Everything numeric that the C++ tests pin down is computed here with mpmath
at elevated working precision and written to

    tests/reference_values.hpp                       (frozen test constants)
    include/leakywell/detail/bessel_asym_coeffs.hpp  (J0/J1 asymptotic fits,
                                                      J0 zero table)

The flow-model section re-implements the entire Laplace-domain drawdown
solution independently of the C++ code (arbitrary precision, straight from
the boundary-value problem) and validates itself against closed-form limits
(Theis, instantaneous drainage, impermeable base, Hankel round trips, and a
direct linear-system solve of the interface conditions) before any value is
frozen.  If an assertion here fails, the formulas are wrong and nothing is
written.

Run from the repository root:

    python3 scripts/gen_reference_values.py
"""

import time

import mpmath as mp
from mpmath import mpf, mpc

mp.mp.dps = 30

T0 = time.time()


def log(msg):
    print(f"[{time.time() - T0:7.1f}s] {msg}", flush=True)


def f17(x):
    """Format a real number as a C++ double literal."""
    return repr(float(x))


def c17(z):
    z = mpc(z)
    return "{%s, %s}" % (f17(z.real), f17(z.imag))


# ---------------------------------------------------------------------------
# 1. Chebyshev fits for the Hankel asymptotic amplitude/phase functions
#
#    J_nu(x) = sqrt(2/(pi x)) [ P_nu(x) cos(chi) - Q_nu(x) sin(chi) ],
#    chi = x - (2 nu + 1) pi / 4.
#
#    P, Q are smooth in w = (9/x)^2; fitted on x in [9, 18] (w in [1/4, 1]).
#    For x > 18 the plain asymptotic series is already at machine precision.
# ---------------------------------------------------------------------------

W_LO = mpf(1) / 4  # w at x = 18
N_CHEB = 30


def pq_exact(nu, x):
    chi = x - (2 * nu + 1) * mp.pi / 4
    amp = mp.sqrt(mp.pi * x / 2)
    j = mp.besselj(nu, x)
    y = mp.bessely(nu, x)
    p = amp * (j * mp.cos(chi) + y * mp.sin(chi))
    q = amp * (y * mp.cos(chi) - j * mp.sin(chi))
    return p, q


def cheb_fit(fvals):
    """Chebyshev coefficients from values at the N-point Chebyshev nodes.

    f(t) ~ c[0]/2 + sum_{j>=1} c[j] T_j(t).
    """
    n = len(fvals)
    coeffs = []
    for j in range(n):
        acc = mpf(0)
        for k in range(n):
            acc += fvals[k] * mp.cos(j * mp.pi * (k + mpf(1) / 2) / n)
        coeffs.append(2 * acc / n)
    return coeffs


def cheb_eval(coeffs, t):
    b0 = b1 = mpf(0)
    for c in reversed(coeffs[1:]):
        b0, b1 = 2 * t * b0 - b1 + c, b0
    return t * b0 - b1 + coeffs[0] / 2


log("fitting Chebyshev tables for J0/J1 asymptotic amplitude/phase ...")
nodes_t = [mp.cos(mp.pi * (k + mpf(1) / 2) / N_CHEB) for k in range(N_CHEB)]
half_span = (1 - W_LO) / 2
mid = (1 + W_LO) / 2
cheb = {}
for nu in (0, 1):
    pv, qv = [], []
    for t in nodes_t:
        w = mid + half_span * t
        x = 9 / mp.sqrt(w)
        p, q = pq_exact(nu, x)
        pv.append(p)
        qv.append(q)
    cheb[(nu, "p")] = cheb_fit(pv)
    cheb[(nu, "q")] = cheb_fit(qv)

# Validate the fits (and the x>18 asymptotic series) against mpmath directly.
worst_fit = mpf(0)
for nu in (0, 1):
    for i in range(181):
        x = 9 + mpf(9) * i / 180
        w = (9 / x) ** 2
        t = (w - mid) / half_span
        p = cheb_eval(cheb[(nu, "p")], t)
        q = cheb_eval(cheb[(nu, "q")], t)
        chi = x - (2 * nu + 1) * mp.pi / 4
        japp = mp.sqrt(2 / (mp.pi * x)) * (p * mp.cos(chi) - q * mp.sin(chi))
        worst_fit = max(worst_fit, abs(japp - mp.besselj(nu, x)))
log(f"  max |J_nu fit error| on [9,18]: {mp.nstr(worst_fit, 3)}")
assert worst_fit < mpf("1e-17"), "Chebyshev fit not converged"


worst_asym = mpf(0)
for nu in (0, 1):
    for x in (18, 21, 25, 32, 50, 90, 200, 700):
        # truncated series exactly as the C++ code will sum it
        mu4 = 4 * nu * nu
        p = mpf(1)
        q = mpf(0)
        term = mpf(1)
        m = 1
        sign_p = -1
        sign_q = 1
        while m < 30:
            term = term * (mu4 - (2 * m - 1) ** 2) / (m * 8 * x)
            if m % 2 == 1:
                q += sign_q * term
                sign_q = -sign_q
            else:
                p += sign_p * term
                sign_p = -sign_p
            if abs(term) < mpf("1e-19"):
                break
            m += 1
        chi = x - (2 * nu + 1) * mp.pi / 4
        japp = mp.sqrt(2 / (mp.pi * x)) * (p * mp.cos(chi) - q * mp.sin(chi))
        worst_asym = max(worst_asym, abs(japp - mp.besselj(nu, x)))
log(f"  max |J_nu asymptotic-series error| on x>=18: {mp.nstr(worst_asym, 3)}")
assert worst_asym < mpf("1e-17")

# ---------------------------------------------------------------------------
# 2. J0 zeros: frozen table k = 1..20, McMahon expansion beyond
# ---------------------------------------------------------------------------

log("computing J0 zeros ...")
j0_zeros = [mp.besseljzero(0, k) for k in range(1, 21)]


def mcmahon_j0(k):
    b = (k - mpf(1) / 4) * mp.pi
    e = 8 * b
    return b + 1 / e - mpf(124) / (3 * e**3) + mpf(120928) / (15 * e**5) \
        - mpf(401743168) / (105 * e**7) + mpf(1071187749376) / (315 * e**9)


worst_mc = mpf(0)
for k in (21, 25, 40, 80, 200, 1000):
    exact = mp.besseljzero(0, k)
    worst_mc = max(worst_mc, abs(mcmahon_j0(k) - exact) / exact)
log(f"  max rel error of McMahon expansion for k>20: {mp.nstr(worst_mc, 3)}")
assert worst_mc < mpf("1e-14")

j0_zero_checks = [(k, mp.besseljzero(0, k)) for k in (21, 34, 50, 120, 333)]

# The coefficient tables above are fully validated by their own assertions,
# so emit their header immediately; the reference-value header stays gated
# behind the flow-model self-checks further down.
coeff_lines = []
coeff_lines.append("// Generated by scripts/gen_reference_values.py -- do not edit by hand.")
coeff_lines.append("//")
coeff_lines.append("// Chebyshev tables (first kind, argument u in [-1,1]) for the Hankel")
coeff_lines.append("// asymptotic amplitude/phase functions of J0 and J1 on x in [9,18]:")
coeff_lines.append("//   J_nu(x) = sqrt(2/(pi x)) [ P_nu(x) cos(chi) - Q_nu(x) sin(chi) ],")
coeff_lines.append("//   chi = x - (2 nu + 1) pi/4,   u = (2 (9/x)^2 - 5/4) / (3/4).")
coeff_lines.append("// The leading coefficient is already halved (Clenshaw-ready).")
coeff_lines.append("// Fitted with mpmath at 30 significant digits; max fit error < 1e-17.")
coeff_lines.append("#pragma once")
coeff_lines.append("")
coeff_lines.append("namespace leakywell::detail {")
coeff_lines.append("")
for nu in (0, 1):
    for pq in ("p", "q"):
        cs = list(cheb[(nu, pq)])
        cs[0] = cs[0] / 2
        while len(cs) > 1 and abs(cs[-1]) < mpf("1e-18"):
            cs.pop()
        coeff_lines.append(f"inline constexpr double j{nu}_asym_{pq}[{len(cs)}] = {{")
        for v in cs:
            coeff_lines.append(f"    {f17(v)},")
        coeff_lines.append("};")
        coeff_lines.append("")
coeff_lines.append("// First twenty roots of J0, to full double precision.")
coeff_lines.append("inline constexpr double j0_zero_table[20] = {")
for z in j0_zeros:
    coeff_lines.append(f"    {f17(z)},")
coeff_lines.append("};")
coeff_lines.append("")
coeff_lines.append("}  // namespace leakywell::detail")
coeff_lines.append("")

with open("include/leakywell/detail/bessel_asym_coeffs.hpp", "w") as f:
    f.write("\n".join(coeff_lines))

# ---------------------------------------------------------------------------
# 3. Frozen J grids and assorted special-function values
# ---------------------------------------------------------------------------

log("freezing special-function reference values ...")
j_grid_x = [mpf(s) for s in
            ["0.1", "0.5", "1.0", "2.0", "3.8317059702075123", "5.0", "7.0",
             "8.9", "9.5", "11.0", "14.2", "17.0", "18.5", "22.0", "30.0",
             "50.0", "120.3"]]
j_grid = [(x, mp.besselj(0, x), mp.besselj(1, x)) for x in j_grid_x]

jnu_cases = [(mpf("2.5"), mpf("3.7")), (mpf(7), mpf("2.2")), (mpf(3), mpf(45)),
             (mpf("0.4"), mpf(25)), (mpf("12.3"), mpf("8.1")),
             (mpf("12.3"), mpf(30)), (mpf(5), mpf("0.05"))]
jnu_vals = [(nu, x, mp.besselj(nu, x)) for nu, x in jnu_cases]

k01_points = [mpc(*p) for p in [
    ("0.05", "0.2"), ("0.3", "0.1"), ("1.0", "0.0"), ("1.5", "-2.0"),
    ("3.0", "0.5"), ("2.0", "7.0"), ("8.0", "1.0"), ("5.0", "-12.0"),
    ("15.0", "3.0"), ("30.0", "40.0"), ("120.0", "9.0")]]
k01_vals = []
for z in k01_points:
    k0 = mp.besselk(0, z)
    k1 = mp.besselk(1, z)
    s = mp.exp(z)
    k01_vals.append((z, k0, k1, k0 * s, k1 * s))

iknu_cases = [
    (mpf("0.5"), mpc(1, 0)),
    (mpf(1) / 3, mpc(2, 1)),
    (mpf("2.7"), mpc("0.8", "-0.4")),
    (mpf("5.0"), mpc(10, 2)),
    (mpf("12.3"), mpc(4, 3)),
    (mpf("47.5"), mpc(30, 10)),
]
iknu_vals = []
for nu, z in iknu_cases:
    i0 = mp.besseli(nu, z)
    i1 = mp.besseli(nu + 1, z)
    k0 = mp.besselk(nu, z)
    k1 = mp.besselk(nu + 1, z)
    iknu_vals.append((nu, z, i0, i1, k0, k1))

# very large order: freeze ratios (what the solver actually consumes)
ik_ratio_cases = [(mpf("500.2"), mpc(80, 30)), (mpf("2000.0"), mpc(150, 0))]
ik_ratio_vals = []
for nu, z in ik_ratio_cases:
    ir = mp.besseli(nu + 1, z) / mp.besseli(nu, z)
    kr = mp.besselk(nu + 1, z) / mp.besselk(nu, z)
    ik_ratio_vals.append((nu, z, ir, kr))

wu_cases = [mpf(s) for s in ["1e-4", "1e-2", "0.25", "1.0", "2.5", "6.0"]]
wu_vals = [(u, mp.expint(1, u)) for u in wu_cases]

misc = {
    "k0_of_1": mp.besselk(0, 1),
    "k1_of_1": mp.besselk(1, 1),
    "i_half_of_1": mp.besseli(mpf("0.5"), 1),
    "cosh_ratio_0_1": mp.cosh(0) / mp.cosh(1),
    "exp_j0_integral": mp.mpf(1) / mp.sqrt(2),      # int_0^inf e^-y J0(y) dy
    "lorentz_j0_integral": mp.besselk(0, 1),        # int_0^inf y/(y^2+1) J0(y) dy
    "inv_e": mp.exp(-1),
    "two_over_sqrt_pi": 2 / mp.sqrt(mp.pi),
    "one_minus_inv_e": 1 - mp.exp(-1),
    "ln2": mp.log(2),
}

# ---------------------------------------------------------------------------
# 4. Independent arbitrary-precision implementation of the Laplace-domain
#    drawdown solution.
#
# Geometry (dimensionless, z_D positive up, aquifer is 0 <= z_D <= 1):
#   aquitard:   -R_b <= z_D <= 0
#   aquifer:        0 <= z_D <= 1   (pumping well screened d_D..l_D from top)
#   vadose zone:    1 <= z_D <= 1 + L_D
#
# beta is the Laplace parameter conjugate to t_s = K_r t / (S_s r^2).
# All drawdowns below are in dimensionless form s_D = 4 pi K_r b s / Q.
# ---------------------------------------------------------------------------


class Groups:
    def __init__(self, **kw):
        self.K_D = mpf(kw.get("K_D", 1))
        self.S_D = mpf(kw.get("S_D", 0))
        self.a_kD = mpf(kw.get("a_kD", 1))
        self.a_cD = mpf(kw.get("a_cD", 1))
        self.psi_aD = mpf(kw.get("psi_aD", 0))
        self.psi_kD = mpf(kw.get("psi_kD", 0))
        self.L_D = mp.inf if kw.get("L_D", mp.inf) == mp.inf else mpf(kw["L_D"])
        self.r_wb = mpf(kw.get("r_wb", "1e-6"))
        self.C_wD = mpf(kw.get("C_wD", 0))
        self.d_D = mpf(kw.get("d_D", 0))
        self.l_D = mpf(kw.get("l_D", 1))
        self.R_Kr = mpf(kw.get("R_Kr", 0))
        self.R_Kz = mpf(kw.get("R_Kz", 0))
        self.R_Ss = mpf(kw.get("R_Ss", 1))
        self.R_b = mp.inf if kw.get("R_b", mp.inf) == mp.inf else mpf(kw["R_b"])


def conf_tables(g, beta, r_D, nmax):
    """Per-beta tables: m_n, w_n = c_w m_n, K0/K1(w_n), omega_n."""
    c_w = mp.sqrt(g.K_D) * g.r_wb
    r_wD = g.r_wb / r_D
    delta = g.l_D - g.d_D
    base = beta / (g.K_D * r_D * r_D)
    tabs = []
    for n in range(nmax + 1):
        m2 = base + (n * mp.pi) ** 2
        m = mp.sqrt(m2)
        w = c_w * m
        k0 = mp.besselk(0, w)
        k1 = mp.besselk(1, w)
        Om = w * k1 + g.C_wD / (2 * delta) * w * w * k0
        if n == 0:
            om = 2 / Om
        else:
            om = (mp.sin(n * mp.pi * g.l_D) - mp.sin(n * mp.pi * g.d_D)) / (n * mp.pi * delta * Om)
        tabs.append((m, m2, w, k0, k1, om))
    return tabs


def sbar_C(g, beta, r_D, z_D, tol=mpf("1e-28")):
    """Laplace-domain confined-flow drawdown (the source part), point value."""
    c = mp.sqrt(g.K_D) * r_D
    tabs = conf_tables(g, beta, r_D, 0)  # n=0 row; higher n computed on demand
    base = beta / (g.K_D * r_D * r_D)
    c_w = mp.sqrt(g.K_D) * g.r_wb
    delta = g.l_D - g.d_D
    m0 = tabs[0][0]
    tot = tabs[0][5] * mp.besselk(0, c * m0)
    small = 0
    n = 1
    while n < 100000:
        m2 = base + (n * mp.pi) ** 2
        m = mp.sqrt(m2)
        w = c_w * m
        k0w = mp.besselk(0, w)
        k1w = mp.besselk(1, w)
        Om = w * k1w + g.C_wD / (2 * delta) * w * w * k0w
        om = (mp.sin(n * mp.pi * g.l_D) - mp.sin(n * mp.pi * g.d_D)) / (n * mp.pi * delta * Om)
        term = om * mp.besselk(0, c * m) * mp.cos(n * mp.pi * (1 - z_D))
        tot += term
        small = small + 1 if abs(term) <= tol * abs(tot) else 0
        if small >= 4:
            break
        n += 1
    return tot / beta


def wynn(partials):
    """Epsilon algorithm; returns the highest even-column estimate."""
    n = len(partials)
    e0 = [mpc(0)] * (n + 1)
    e1 = list(partials)
    best = e1[-1]
    col = 1
    while len(e1) >= 2:
        e2 = []
        for i in range(len(e1) - 1):
            d = e1[i + 1] - e1[i]
            if d == 0:
                return best
            e2.append(e0[i + 1] + 1 / d)
        e0 = e1
        e1 = e2
        if col % 2 == 0 and e1:
            best = e1[-1]
        col += 1
        if col % 2 == 1 and e1:
            best = e1[-1]
    return best


class ShatSeries:
    """Per-beta evaluator of the reduced (Hankel x Laplace) source term.

    shat(y, z_D) is the order-0 Hankel transform (in rho = K_D^(1/2) r_D,
    conjugate variable y) of sbar_C extended inside the well face by its
    face value.  Series over n is summed directly past the m_n ~ y turnover
    and epsilon-accelerated on its oscillatory algebraic tail.
    """

    def __init__(self, g, beta, r_D, nmax=420):
        self.g = g
        self.beta = beta
        self.c_w = mp.sqrt(g.K_D) * g.r_wb
        self.tabs = conf_tables(g, beta, r_D, nmax)
        self.nmax = nmax

    def term(self, n, y, j0xw, j1xw):
        m, m2, w, k0, k1, om = self.tabs[n]
        first = self.c_w / y * j1xw * k0
        second = (w * j0xw * k1 - y * self.c_w * j1xw * k0) / (y * y + m2)
        return om * (first + second)

    def eval01(self, y):
        """Returns (shat(y, z_D=0), shat(y, z_D=1))."""
        g, beta = self.g, self.beta
        xw = y * self.c_w
        j0xw = mp.besselj(0, xw)
        j1xw = mp.besselj(1, xw)
        n_direct = min(self.nmax - 48, int(2.5 * float(y) / float(mp.pi)) + 48)
        s1 = self.term(0, y, j0xw, j1xw)
        s0 = s1 + 0
        for n in range(1, n_direct + 1):
            t = self.term(n, y, j0xw, j1xw)
            s1 += t
            s0 += t if n % 2 == 0 else -t
        p1 = [s1]
        p0 = [s0]
        for n in range(n_direct + 1, n_direct + 33):
            t = self.term(n, y, j0xw, j1xw)
            s1 += t
            s0 += t if n % 2 == 0 else -t
            p1.append(s1)
            p0.append(s0)
        return wynn(p0) / beta, wynn(p1) / beta


def vadose_qD(g, beta, y, r_D):
    """Water-table admittance sigma'(1)/sigma(1) of the vadose-zone solution."""
    B_D = beta * g.S_D * g.a_cD * mp.exp(g.a_kD * (g.psi_kD - g.psi_aD)) / (g.K_D * r_D * r_D)
    lam = g.a_kD - g.a_cD
    if abs(lam) <= mpf("1e-12") * (g.a_kD + g.a_cD):
        kap = g.a_kD
        root = mp.sqrt(kap * kap + 4 * (B_D + y * y))
        d1 = (kap - root) / 2
        d2 = (kap + root) / 2
        if g.L_D == mp.inf:
            return d1
        chi = -(d1 / d2) * mp.exp((d1 - d2) * g.L_D)
        return (d1 + chi * d2) / (1 + chi)
    nu = mp.sqrt(g.a_kD**2 + 4 * y * y) / abs(lam)
    phi0 = mp.sqrt(4 * B_D) / abs(lam)
    a = g.a_kD
    if g.L_D == mp.inf:
        if lam > 0:
            kr = mp.besselk(nu + 1, phi0) / mp.besselk(nu, phi0)
            return (a + nu * lam) / 2 - (lam * phi0 / 2) * kr
        ir = mp.besseli(nu + 1, phi0) / mp.besseli(nu, phi0)
        return (a + nu * lam) / 2 + (lam * phi0 / 2) * ir
    phiL = phi0 * mp.exp(lam * g.L_D / 2)
    num = (a + nu * lam) * mp.besseli(nu, phiL) + lam * phiL * mp.besseli(nu + 1, phiL)
    den = (a + nu * lam) * mp.besselk(nu, phiL) - lam * phiL * mp.besselk(nu + 1, phiL)
    chi = -num / den
    zn = mp.besseli(nu, phi0) + chi * mp.besselk(nu, phi0)
    zd = mp.besseli(nu + 1, phi0) - chi * mp.besselk(nu + 1, phi0)
    return (a + nu * lam) / 2 + (lam * phi0 / 2) * zd / zn


def vadose_profile(g, beta, y, r_D, z_D):
    """sigma(z_D)/sigma(1) for z_D in [1, 1+L_D]."""
    x = z_D - 1
    B_D = beta * g.S_D * g.a_cD * mp.exp(g.a_kD * (g.psi_kD - g.psi_aD)) / (g.K_D * r_D * r_D)
    lam = g.a_kD - g.a_cD
    if abs(lam) <= mpf("1e-12") * (g.a_kD + g.a_cD):
        kap = g.a_kD
        root = mp.sqrt(kap * kap + 4 * (B_D + y * y))
        d1 = (kap - root) / 2
        d2 = (kap + root) / 2
        if g.L_D == mp.inf:
            return mp.exp(d1 * x)
        L = g.L_D
        r = d1 / d2
        num = mp.exp(d1 * x) - r * mp.exp(d1 * L - d2 * (L - x))
        den = 1 - r * mp.exp((d1 - d2) * L)
        return num / den
    nu = mp.sqrt(g.a_kD**2 + 4 * y * y) / abs(lam)
    phi0 = mp.sqrt(4 * B_D) / abs(lam)
    phix = phi0 * mp.exp(lam * x / 2)
    a = g.a_kD
    if g.L_D == mp.inf:
        if lam > 0:
            zc = mp.besselk(nu, phix) / mp.besselk(nu, phi0)
        else:
            zc = mp.besseli(nu, phix) / mp.besseli(nu, phi0)
        return mp.exp(a * x / 2) * zc
    phiL = phi0 * mp.exp(lam * g.L_D / 2)
    num = (a + nu * lam) * mp.besseli(nu, phiL) + lam * phiL * mp.besseli(nu + 1, phiL)
    den = (a + nu * lam) * mp.besselk(nu, phiL) - lam * phiL * mp.besselk(nu + 1, phiL)
    chi = -num / den
    zx = mp.besseli(nu, phix) + chi * mp.besselk(nu, phix)
    z0 = mp.besseli(nu, phi0) + chi * mp.besselk(nu, phi0)
    return mp.exp(a * x / 2) * zx / z0


def aquitard_q1b(g, beta, y, r_D):
    if g.R_Kz == 0:
        return mpf(0)
    mu1 = mp.sqrt(y * y * g.R_Kr / g.R_Kz + beta * g.R_Ss / (g.K_D * r_D * r_D * g.R_Kz))
    t = mpf(1) if g.R_b == mp.inf else mp.tanh(mu1 * g.R_b)
    return g.R_Kz * mu1 * t


def aquitard_mu1(g, beta, y, r_D):
    return mp.sqrt(y * y * g.R_Kr / g.R_Kz + beta * g.R_Ss / (g.K_D * r_D * r_D * g.R_Kz))


def rho_pair(g, beta, y, r_D, S0, S1):
    """Coefficients of the water-table correction A e^{mu z} + B e^{-mu z}.

    Solves the interface conditions
        d/dz sU |_{z=0} = q1b (S0 + sU(0))
        d/dz sU |_{z=1} = qD  (S1 + sU(1))
    in an overflow-free form (all retained exponentials decay).
    """
    mu = mp.sqrt(y * y + beta / (g.K_D * r_D * r_D))
    qD = vadose_qD(g, beta, y, r_D)
    q1b = aquitard_q1b(g, beta, y, r_D)
    a = qD / mu
    b = q1b / mu
    em = mp.exp(-mu)
    em2 = em * em
    D = (1 + a) * (1 - b) * em2 - (1 - a) * (1 + b)
    rho1 = (b * (1 + a) * em2 * S0 - a * (1 + b) * em * S1) / D
    rho2 = (b * (1 - a) * S0 - a * (1 - b) * em * S1) / D
    return rho1, rho2, mu, qD, q1b


def su_hat(g, beta, y, r_D, S0, S1, z_D):
    """Reduced water-table correction at height z_D in [0,1]."""
    rho1, rho2, mu, qD, q1b = rho_pair(g, beta, y, r_D, S0, S1)
    return rho1 * mp.exp(mu * z_D) + rho2 * mp.exp(-mu * z_D)


J0Z = [mp.besseljzero(0, k) for k in range(1, 301)]


def _gauss_legendre(n):
    """Nodes/weights on [-1, 1] by Newton iteration on the recurrence."""
    nodes = []
    for i in range(1, n // 2 + 1):
        x = mp.cos(mp.pi * (i - mpf(1) / 4) / (n + mpf(1) / 2))
        dp = mpf(1)
        for _ in range(100):
            p0, p1 = mpf(1), x
            for k in range(2, n + 1):
                p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
            dp = n * (x * p1 - p0) / (x * x - 1)
            dx = p1 / dp
            x -= dx
            if abs(dx) < mpf(10) ** (-(mp.mp.dps + 5)):
                break
        w = 2 / ((1 - x * x) * dp * dp)
        nodes.append((x, w))
    out = [(-x, w) for x, w in nodes]
    if n % 2 == 1:
        raise ValueError("even n only")
    out += [(x, w) for x, w in reversed(nodes)]
    return out


GL16 = _gauss_legendre(16)


def gl_panel(f, a, b):
    """Fixed 16-node Gauss-Legendre panel (the library's panel rule).

    Fixed degree instead of adaptive refinement: the series evaluations under
    the integral carry a ~1e-9 relative tail-extrapolation plateau, so an
    adaptive rule chasing full working precision escalates forever without
    gaining accuracy."""
    hw = (b - a) / 2
    mid = (a + b) / 2
    return hw * mp.fsum(w * f(mid + hw * x) for x, w in GL16)


def hankel_quad(f, c, max_panels=120, tol=None, inner=None):
    """integral_0^inf f(y) J0(c y) dy by panels between kernel zeros,
    epsilon-accelerated if the panel sums do not die out on their own.

    `inner` is the width of the finest structure f carries near y = 0
    (the smallest modified wavenumber, ~ sqrt|beta|/c); the first panel is
    subdivided geometrically down to that scale so a fixed-degree rule can
    resolve it.  Without this, late-time (small-beta) integrands hide an
    O(1)-mass feature far inside the first kernel half-wave."""
    if tol is None:
        # Floor at 1e-11: the integrand itself is only good to ~1e-9, so
        # demanding full working precision would just burn panels.
        tol = max(mpf(10) ** (-(mp.mp.dps - 6)), mpf("1e-11"))
    edges = [mpf(0)] + [z / c for z in J0Z[:max_panels]]
    partials = []
    tot = mpc(0)
    small = 0
    acc_prev = None
    for k in range(max_panels):
        if k == 0 and inner is not None and 0 < inner < edges[1]:
            depth = min(64, int(mp.ceil(mp.log(edges[1] / inner, 2))))
            subs = [edges[1] * mpf(2) ** (-j) for j in range(depth, -1, -1)]
            p = gl_panel(lambda y: f(y) * mp.besselj(0, c * y), mpf(0), subs[0])
            for a, b in zip(subs[:-1], subs[1:]):
                p += gl_panel(lambda y: f(y) * mp.besselj(0, c * y), a, b)
        else:
            p = gl_panel(lambda y: f(y) * mp.besselj(0, c * y), edges[k], edges[k + 1])
        tot += p
        partials.append(tot)
        if abs(p) <= tol * max(abs(tot), mpf("1e-300")):
            small += 1
            if small >= 3:
                return tot
        else:
            small = 0
        if k >= 12:
            acc = wynn(partials[-41:])
            if acc_prev is not None and abs(acc - acc_prev) <= tol * max(abs(acc), mpf("1e-300")):
                return acc
            acc_prev = acc
    return wynn(partials[-41:])


def inner_scale(g, beta, r_D):
    """Finest near-origin y-structure of the transform-domain kernels: the
    aquifer modified wavenumber |m_0|, shrunk when the aquitard response
    turns over below it (at y ~ m_0 sqrt(R_Ss / R_Kr))."""
    s = mp.sqrt(abs(beta) / g.K_D) / r_D
    if g.R_Kz > 0 and g.R_Kr > 0:
        s *= min(mpf(1), max(mpf(1) / 32, mp.sqrt(g.R_Ss / g.R_Kr)))
    return s


def field_point(g, beta, r_D, z_D, shat=None, quad_tol=None, nmax=420):
    """Full Laplace-domain dimensionless drawdown at (r_D, z_D)."""
    c = mp.sqrt(g.K_D) * r_D
    inn = inner_scale(g, beta, r_D)
    if shat is None:
        shat = ShatSeries(g, beta, r_D, nmax=nmax)

    if 0 <= z_D <= 1:
        sC = sbar_C(g, beta, r_D, z_D)

        def f(y):
            S0, S1 = shat.eval01(y)
            return y * su_hat(g, beta, y, r_D, S0, S1, z_D)

        return sC + hankel_quad(f, c, tol=quad_tol, inner=inn)
    if z_D > 1:
        def f(y):
            S0, S1 = shat.eval01(y)
            rho1, rho2, mu, qD, q1b = rho_pair(g, beta, y, r_D, S0, S1)
            top = S1 + rho1 * mp.exp(mu) + rho2 * mp.exp(-mu)
            return y * top * vadose_profile(g, beta, y, r_D, z_D)

        return hankel_quad(f, c, tol=quad_tol, inner=inn)

    def f(y):
        S0, S1 = shat.eval01(y)
        rho1, rho2, mu, qD, q1b = rho_pair(g, beta, y, r_D, S0, S1)
        iface = S0 + rho1 + rho2
        mu1 = aquitard_mu1(g, beta, y, r_D)
        if g.R_b == mp.inf:
            ratio = mp.exp(mu1 * z_D)
        else:
            ratio = mp.cosh(mu1 * (z_D + g.R_b)) / mp.cosh(mu1 * g.R_b)
        return y * iface * ratio

    return hankel_quad(f, c, tol=quad_tol, inner=inn)


# ---------------------------------------------------------------------------
# 5. Self-checks (all must pass before freezing)
# ---------------------------------------------------------------------------

log("self-check: interface conditions vs direct 2x2 solve ...")
G2B = Groups(K_D=1, S_D=1000, a_kD=10, a_cD=10, r_wb="0.02", C_wD=100,
             d_D=0, l_D="0.6", R_Kr="1e-2", R_Kz="1e-2", R_Ss="1e-2")
for beta, y in [(mpc(1, 0), mpf("0.7")), (mpc("0.2", "1.4"), mpf("3.3")),
                (mpc("30", "-12"), mpf("40.0"))]:
    sh = ShatSeries(G2B, beta, mpf("0.5"))
    S0, S1 = sh.eval01(y)
    rho1, rho2, mu, qD, q1b = rho_pair(G2B, beta, y, mpf("0.5"), S0, S1)
    # direct solve of the boundary conditions
    A = mp.matrix([[mu - q1b, -mu - q1b],
                   [(mu - qD) * mp.exp(mu), (-mu - qD) * mp.exp(-mu)]])
    rhs = mp.matrix([q1b * S0, qD * S1])
    sol = mp.lu_solve(A, rhs)
    err = max(abs(sol[0] - rho1), abs(sol[1] - rho2)) / max(abs(rho1), abs(rho2))
    assert err < mpf("1e-22"), f"rho mismatch {err}"
log("  ok")

log("self-check: impermeable-base closed form equals general assembly ...")
GNL = Groups(K_D=1, S_D=1000, a_kD=10, a_cD=10, r_wb="0.02", C_wD=100,
             d_D=0, l_D="0.6", R_Kr=0, R_Kz=0, R_Ss=1)
for beta, y in [(mpc(1, 0), mpf("0.7")), (mpc("0.2", "1.4"), mpf("3.3"))]:
    sh = ShatSeries(GNL, beta, mpf("0.5"))
    S0, S1 = sh.eval01(y)
    rho1, rho2, mu, qD, q1b = rho_pair(GNL, beta, y, mpf("0.5"), S0, S1)
    assert q1b == 0
    closed = -S1 / (2 * (mp.cosh(mu) - (mu / qD) * mp.sinh(mu)))
    err = max(abs(rho1 - closed), abs(rho2 - closed)) / abs(closed)
    assert err < mpf("1e-22"), f"closed-form mismatch {err}"
log("  ok  (rho1 = rho2 = -sbar(1)/(2[cosh(mu) - (mu/qD) sinh(mu)]))")

log("self-check: Hankel round trip of the reduced source term ...")
# One interior z suffices: the z-dependence of both forms is the identical
# cosine factor, so the round trip only probes the radial structure.  The
# achievable agreement is set by the ~1e-9 tail-extrapolation plateau of the
# n-series under the integral (a formula error would show up at O(1)).
beta = mpf(1)
r_D = mpf("0.5")
c = mp.sqrt(G2B.K_D) * r_D
sh = ShatSeries(G2B, beta, r_D, nmax=420)
for z_D in (mpf("0.25"),):
    direct = sbar_C(G2B, beta, r_D, z_D)

    def f(y, zz=z_D):
        if zz == 1:
            return y * sh.eval01(y)[1]
        if zz == 0:
            return y * sh.eval01(y)[0]
        # general z: rebuild from the cached tables with the cosine factor
        xw = y * sh.c_w
        j0xw = mp.besselj(0, xw)
        j1xw = mp.besselj(1, xw)
        n_direct = min(sh.nmax - 48, int(2.5 * float(y) / float(mp.pi)) + 48)
        acc = sh.term(0, y, j0xw, j1xw)
        for n in range(1, n_direct + 1):
            acc += sh.term(n, y, j0xw, j1xw) * mp.cos(n * mp.pi * (1 - zz))
        ps = [acc]
        for n in range(n_direct + 1, n_direct + 33):
            acc += sh.term(n, y, j0xw, j1xw) * mp.cos(n * mp.pi * (1 - zz))
            ps.append(acc)
        return y * wynn(ps) / beta

    rt = hankel_quad(f, c, inner=inner_scale(G2B, beta, r_D))
    err = abs(rt - direct) / abs(direct)
    log(f"  z_D={float(z_D)}: |roundtrip-direct|/|direct| = {mp.nstr(err, 3)}")
    assert err < mpf("1e-6"), f"round trip failed {err}"

log("self-check: Theis limit of the confined part ...")
GTH = Groups(K_D=1, S_D=0, a_kD="1e8", a_cD="1e8", r_wb="1e-6", C_wD=0,
             d_D=0, l_D=1, R_Kr=0, R_Kz=0)
for ts in (mpf("0.1"), mpf(10)):
    val = mp.invertlaplace(lambda p: sbar_C(GTH, p, mpf(1), mpf("0.5")),
                           ts, method="dehoog", degree=16)
    w = mp.expint(1, 1 / (4 * ts))
    err = abs(val - w) / w
    # degree-16 de Hoog truncation sits near 2e-10; anything wrong with the
    # formula itself would miss by orders of magnitude
    assert err < mpf("1e-8"), f"Theis mismatch {err}"
log("  ok (matches exponential-integral well function)")

log("self-check: instantaneous-drainage late-time limit (Theis with S+Sy) ...")
GIN = Groups(K_D=1, S_D=10, a_kD="1e7", a_cD="1e7", r_wb="1e-6", C_wD=0,
             d_D=0, l_D=1, R_Kr=0, R_Kz=0)
ts = mpf("2e4")
mp.mp.dps = 20
val = mp.invertlaplace(lambda p: field_point(GIN, p, mpf(1), mpf("0.5"),
                                             quad_tol=mpf("1e-9"), nmax=256),
                       ts, method="dehoog", degree=10)
mp.mp.dps = 30
w = mp.expint(1, (1 + GIN.S_D) / (4 * ts))
err = abs(val - w) / w
log(f"  s_D(t_s=2e4) = {mp.nstr(val, 10)}, Theis(S+Sy) = {mp.nstr(w, 10)}, rel diff = {mp.nstr(err, 3)}")
assert err < mpf("3e-3"), f"late-time limit mismatch {err}"

log("self-check: vadose Bessel branch continuity at lambda -> 0 ...")
# qD is analytic in lambda = a_kD - a_cD, so the Bessel-order branch must
# approach the equal-exponent branch linearly as lambda -> 0 from either
# side.  The order nu scales as 1/|lambda|, so probe at moderate lambda and
# verify the convergence rate (halving lambda should roughly halve the gap)
# rather than pushing besselk to astronomically large order.
ge = Groups(K_D=1, S_D=1000, a_kD=10, a_cD=10, r_wb="0.02")
for sgn in (1, -1):
    errs = []
    for lam in (mpf("0.2"), mpf("0.1")):
        gl = Groups(K_D=1, S_D=1000, a_kD=10 + sgn * lam, a_cD=10, r_wb="0.02")
        worst = mpf(0)
        for y in (mpf("0.7"), mpf(12)):
            qe = vadose_qD(ge, mpc(1, "0.5"), y, mpf("0.5"))
            qb = vadose_qD(gl, mpc(1, "0.5"), y, mpf("0.5"))
            worst = max(worst, abs(qe - qb) / abs(qe))
        errs.append(worst)
    e1, e2 = errs
    assert e1 < mpf("0.05"), f"branch mismatch at lambda={sgn * 0.2}: {e1}"
    if e1 > mpf("1e-6"):
        rate = e2 / e1
        assert mpf("0.3") < rate < mpf("0.7"), f"branch convergence rate off: {rate}"
log("  ok")

log("self-check: vadose finite-column no-flux condition ...")
gf = Groups(K_D=1, S_D=1000, a_kD=10, a_cD=2, L_D="1.5", r_wb="0.02")
y = mpf("0.9")
betachk = mpc("0.8", "0.3")
h = mpf("1e-8")
top = 1 + gf.L_D
d = (vadose_profile(gf, betachk, y, mpf("0.5"), top) -
     vadose_profile(gf, betachk, y, mpf("0.5"), top - h)) / h
assert abs(d) < mpf("1e-5"), f"flux at land surface not zero: {d}"
q0 = vadose_qD(gf, betachk, y, mpf("0.5"))
dd = (vadose_profile(gf, betachk, y, mpf("0.5"), 1 + h) - 1) / h
assert abs(dd - q0) / abs(q0) < mpf("1e-6"), "qD inconsistent with profile"
log("  ok")

# ---------------------------------------------------------------------------
# 6. Freezes: Laplace-domain and time-domain regression values
# ---------------------------------------------------------------------------

log("freezing Laplace-domain spot values (fig2-style parameter set) ...")
frozen = {}

# Real probes stay mpf: mpmath's real Bessel path is an order of magnitude
# faster than the complex one and the frozen value is identical.
sp = [(mpf(1), mpf("0.5"), mpf("0.25")),
      (mpc("0.03", "0.9"), mpf("0.5"), mpf("0.25")),
      (mpf(100), mpf("0.5"), mpf("0.75")),
      (mpf(5), mpf("0.02"), mpf("0.75"))]
frozen["sbarC"] = [(b, r, z, sbar_C(G2B, b, r, z)) for b, r, z in sp]

sh1 = ShatSeries(G2B, mpf(1), mpf("0.5"))
sh2 = ShatSeries(G2B, mpc("0.2", "1.4"), mpf("0.5"))
shat_rows = []
for sh_, b_, y_ in [(sh1, mpf(1), mpf("0.7")), (sh2, mpc("0.2", "1.4"), mpf("3.3"))]:
    s0, s1 = sh_.eval01(y_)
    shat_rows.append((b_, y_, s0, s1))
frozen["shat"] = shat_rows

qrows = []
for (gg, tag) in [(G2B, "equal"),
                  (Groups(K_D=1, S_D=1000, a_kD=10, a_cD=1, r_wb="0.02"), "besselpos"),
                  (Groups(K_D=1, S_D=1000, a_kD=1, a_cD=10, r_wb="0.02"), "besselneg"),
                  (Groups(K_D=1, S_D=1000, a_kD=10, a_cD=2, L_D="0.5", r_wb="0.02"), "finite")]:
    qrows.append((tag, vadose_qD(gg, mpf(1), mpf("0.7"), mpf("0.5")),
                  vadose_qD(gg, mpc("0.2", "1.4"), mpf("3.3"), mpf("0.5"))))
frozen["qD"] = qrows

g_rb = Groups(R_Kr="1e-2", R_Kz="1e-2", R_Ss="1e-2", R_b=2)
frozen["q1b"] = [
    ("inf", aquitard_q1b(G2B, mpf(1), mpf("0.7"), mpf("0.5"))),
    ("rb2", aquitard_q1b(g_rb, mpf(1), mpf("0.7"), mpf("0.5"))),
]

S0s, S1s = sh1.eval01(mpf("0.7"))
r1, r2, _, _, _ = rho_pair(G2B, mpf(1), mpf("0.7"), mpf("0.5"), S0s, S1s)
frozen["rho"] = [(mpf(1), mpf("0.7"), r1, r2)]

frozen["vprofile"] = [
    ("equal", vadose_profile(G2B, mpf(1), mpf("0.7"), mpf("0.5"), mpf("1.3"))),
    ("besselpos", vadose_profile(Groups(K_D=1, S_D=1000, a_kD=10, a_cD=1, r_wb="0.02"),
                                 mpf(1), mpf("0.7"), mpf("0.5"), mpf("1.3"))),
]

log("freezing Laplace-domain field values (y-integrals) ...")
f_aqu = field_point(G2B, mpf(1), mpf("0.5"), mpf("0.25"))
frozen["field_aquifer"] = (mpf(1), mpf("0.5"), mpf("0.25"), f_aqu)
log(f"  aquifer field at beta=1: {mp.nstr(f_aqu, 16)}")

f_vad = field_point(G2B, mpf(1), mpf("0.5"), mpf("1.02"))
frozen["field_vadose"] = (mpf(1), mpf("0.5"), mpf("1.02"), f_vad)
log(f"  vadose field at beta=1: {mp.nstr(f_vad, 16)}")

G7 = Groups(K_D=1, S_D=1000, a_kD=10, a_cD=10, r_wb="0.02", C_wD=100,
            d_D=0, l_D="0.6", R_Kr="1e-2", R_Kz="1e-2", R_Ss="1e2")
f_tard = field_point(G7, mpf("1e-3"), mpf("0.2"), mpf("-0.25"))
frozen["field_aquitard"] = (mpf("1e-3"), mpf("0.2"), mpf("-0.25"), f_tard)
log(f"  aquitard field at beta=1e-3: {mp.nstr(f_tard, 16)}")

log("freezing z-averaged field (16-node Gauss-Legendre over z in [0.2,0.6]) ...")
# Same fixed z-rule as the library's interval averaging; its truncation for
# this smooth profile is far below the series plateau.
sh_avg = ShatSeries(G2B, mpf(1), mpf("0.5"))
zavg = gl_panel(lambda z: field_point(G2B, mpf(1), mpf("0.5"), z, shat=sh_avg),
                mpf("0.2"), mpf("0.6")) / mpf("0.4")
frozen["field_avg"] = (mpf(1), mpf("0.5"), mpf("0.2"), mpf("0.6"), zavg)
log(f"  averaged field: {mp.nstr(zavg, 16)}")

log("freezing time-domain values (mpmath de Hoog on the full field) ...")
mp.mp.dps = 16
td_rows = []
for ts, r_D, z_D, g in [(mpf(1), mpf("0.5"), mpf("0.25"), G2B),
                        (mpf(100), mpf("0.5"), mpf("0.25"), G2B),
                        (mpf(100), mpf("0.5"), mpf("1.1"), G2B),
                        (mpf("1e4"), mpf("0.2"), mpf("-0.25"), G7)]:
    F = lambda p: field_point(g, p, r_D, z_D, quad_tol=mpf("3e-8"), nmax=320)
    v = mp.invertlaplace(F, ts, method="dehoog", degree=12)
    # Independent inversion route (real probes) to guard the frozen value.
    v2 = mp.invertlaplace(F, ts, method="stehfest", degree=12)
    dd = abs(v2 - v) / abs(v)
    log(f"  s_D(t_s={float(ts)}, r_D={float(r_D)}, z_D={float(z_D)}) = "
        f"{mp.nstr(v, 12)}  (vs stehfest: {mp.nstr(dd, 3)})")
    assert dd < mpf("5e-4"), f"inversion routes disagree: {dd}"
    td_rows.append((ts, r_D, z_D, "fig2" if g is G2B else "fig7", v))
mp.mp.dps = 30
frozen["timedomain"] = td_rows

# ---------------------------------------------------------------------------
# 7. Emit headers
# ---------------------------------------------------------------------------

log("writing headers ...")

ref = []
ref.append("// Generated by scripts/gen_reference_values.py -- do not edit by hand.")
ref.append("//")
ref.append("// Frozen reference values for the unit and acceptance tests, computed")
ref.append("// with mpmath at 30 significant digits.  The flow-model rows come from an")
ref.append("// independent arbitrary-precision implementation of the Laplace-domain")
ref.append("// solution that is self-checked against closed-form limits before any")
ref.append("// value is written (see the generator script).")
ref.append("#pragma once")
ref.append("")
ref.append("#include <complex>")
ref.append("")
ref.append("namespace leakywell::testref {")
ref.append("")
ref.append("using cplx = std::complex<double>;")
ref.append("")

ref.append("// ---- J0/J1 on a grid spanning series, fitted and asymptotic ranges ----")
ref.append("struct JPair { double x, j0, j1; };")
ref.append(f"inline constexpr JPair j01_grid[{len(j_grid)}] = {{")
for x, a, b in j_grid:
    ref.append(f"    {{{f17(x)}, {f17(a)}, {f17(b)}}},")
ref.append("};")
ref.append("")

ref.append("struct JNu { double nu, x, j; };")
ref.append(f"inline constexpr JNu jnu_vals[{len(jnu_vals)}] = {{")
for nu, x, v in jnu_vals:
    ref.append(f"    {{{f17(nu)}, {f17(x)}, {f17(v)}}},")
ref.append("};")
ref.append("")

ref.append("// ---- roots of J0 beyond the frozen table ----")
ref.append("struct ZeroCheck { int k; double value; };")
ref.append(f"inline constexpr ZeroCheck j0_zero_checks[{len(j0_zero_checks)}] = {{")
for k, v in j0_zero_checks:
    ref.append(f"    {{{k}, {f17(v)}}},")
ref.append("};")
ref.append("")

ref.append("// ---- complex-argument K0/K1 (plus e^z-scaled variants) ----")
ref.append("struct K01Row { cplx z, k0, k1, k0s, k1s; };")
ref.append(f"inline const K01Row k01_rows[{len(k01_vals)}] = {{")
for z, k0, k1, k0s, k1s in k01_vals:
    ref.append(f"    {{{c17(z)}, {c17(k0)}, {c17(k1)}, {c17(k0s)}, {c17(k1s)}}},")
ref.append("};")
ref.append("")

ref.append("// ---- general-order I/K pairs ----")
ref.append("struct IKRow { double nu; cplx z, inu, inu1, knu, knu1; };")
ref.append(f"inline const IKRow iknu_rows[{len(iknu_vals)}] = {{")
for nu, z, i0, i1, k0, k1 in iknu_vals:
    ref.append(f"    {{{f17(nu)}, {c17(z)}, {c17(i0)}, {c17(i1)}, {c17(k0)}, {c17(k1)}}},")
ref.append("};")
ref.append("")

ref.append("// ---- large-order ratios I_{nu+1}/I_nu and K_{nu+1}/K_nu ----")
ref.append("struct IKRatioRow { double nu; cplx z, iratio, kratio; };")
ref.append(f"inline const IKRatioRow ik_ratio_rows[{len(ik_ratio_vals)}] = {{")
for nu, z, ir, kr in ik_ratio_vals:
    ref.append(f"    {{{f17(nu)}, {c17(z)}, {c17(ir)}, {c17(kr)}}},")
ref.append("};")
ref.append("")

ref.append("// ---- exponential-integral well function W(u) = E1(u) ----")
ref.append("struct WRow { double u, w; };")
ref.append(f"inline constexpr WRow wu_rows[{len(wu_vals)}] = {{")
for u, w in wu_vals:
    ref.append(f"    {{{f17(u)}, {f17(w)}}},")
ref.append("};")
ref.append("")

ref.append("// ---- assorted frozen scalars ----")
for k, v in misc.items():
    ref.append(f"inline constexpr double {k} = {f17(v)};")
ref.append("")

ref.append("// ---- flow model: frozen Laplace-domain values ----")
ref.append("// Shared parameter set A: K_D=1, S_D=1e3, a_kD=a_cD=10, psi_aD=psi_kD,")
ref.append("// r_wb=0.02, C_wD=100, d_D=0, l_D=0.6, R_Kr=R_Kz=R_Ss=1e-2, R_b=inf,")
ref.append("// L_D=inf.  Parameter set B differs by R_Ss=1e2 (slow deep aquitard).")
ref.append("struct SbarCRow { cplx beta; double r_D, z_D; cplx value; };")
ref.append(f"inline const SbarCRow sbarC_rows[{len(frozen['sbarC'])}] = {{")
for b, r, z, v in frozen["sbarC"]:
    ref.append(f"    {{{c17(b)}, {f17(r)}, {f17(z)}, {c17(v)}}},")
ref.append("};")
ref.append("")

ref.append("// reduced source term at z_D = 0 and z_D = 1 (r_D = 0.5)")
ref.append("struct ShatRow { cplx beta; double y; cplx at0, at1; };")
ref.append(f"inline const ShatRow shat_rows[{len(frozen['shat'])}] = {{")
for b, y, s0, s1 in frozen["shat"]:
    ref.append(f"    {{{c17(b)}, {f17(y)}, {c17(s0)}, {c17(s1)}}},")
ref.append("};")
ref.append("")

ref.append("// water-table admittance q_D at (beta=1, y=0.7) and (beta=0.2+1.4i, y=3.3),")
ref.append("// r_D=0.5; rows: equal exponents (a=10), a_kD=10/a_cD=1, a_kD=1/a_cD=10,")
ref.append("// finite column a_kD=10/a_cD=2/L_D=0.5 (S_D=1e3 throughout)")
ref.append("struct QDRow { cplx q_a, q_b; };")
ref.append(f"inline const QDRow qD_rows[{len(frozen['qD'])}] = {{")
for tag, qa, qb in frozen["qD"]:
    ref.append(f"    {{{c17(qa)}, {c17(qb)}}},  // {tag}")
ref.append("};")
ref.append("")

ref.append("// aquitard admittance q1b at beta=1, y=0.7, r_D=0.5 (set A; then R_b=2)")
for tag, v in frozen["q1b"]:
    ref.append(f"inline const cplx q1b_{tag} = {c17(v)};")
ref.append("")

ref.append("// interface coefficients at beta=1, y=0.7, r_D=0.5 (set A)")
b, y, r1v, r2v = frozen["rho"][0]
ref.append(f"inline const cplx rho1_ref = {c17(r1v)};")
ref.append(f"inline const cplx rho2_ref = {c17(r2v)};")
ref.append("")

ref.append("// vadose profile sigma(z_D)/sigma(1) at beta=1, y=0.7, r_D=0.5, z_D=1.3")
for tag, v in frozen["vprofile"]:
    ref.append(f"inline const cplx vprofile_{tag} = {c17(v)};")
ref.append("")

ref.append("// full Laplace-domain fields (Hankel integrals done at 30 digits)")
b, r, z, v = frozen["field_aquifer"]
ref.append(f"inline const cplx field_aquifer_ref = {c17(v)};   // beta=1, r_D=0.5, z_D=0.25, set A")
b, r, z, v = frozen["field_vadose"]
ref.append(f"inline const cplx field_vadose_ref = {c17(v)};   // beta=1, r_D=0.5, z_D=1.02, set A")
b, r, z, v = frozen["field_aquitard"]
ref.append(f"inline const cplx field_aquitard_ref = {c17(v)};   // beta=1e-3, r_D=0.2, z_D=-0.25, set B")
b, r, z1, z2, v = frozen["field_avg"]
ref.append(f"inline const cplx field_avg_ref = {c17(v)};   // beta=1, r_D=0.5, z_D avg over [0.2,0.6], set A")
ref.append("")

ref.append("// time-domain regression values (independent de Hoog inversion,")
ref.append("// cross-checked against Gaver-Stehfest at generation time)")
ref.append("struct TimeRow { double t_s, r_D, z_D; int pset; double s_D; };")
ref.append(f"inline constexpr TimeRow time_rows[{len(frozen['timedomain'])}] = {{")
for ts, r_D, z_D, tag, v in frozen["timedomain"]:
    pset = 0 if tag == "fig2" else 1
    ref.append(f"    {{{f17(ts)}, {f17(r_D)}, {f17(z_D)}, {pset}, {f17(v)}}},")
ref.append("};")
ref.append("")
ref.append("}  // namespace leakywell::testref")
ref.append("")

with open("tests/reference_values.hpp", "w") as f:
    f.write("\n".join(ref))

log("done.")
