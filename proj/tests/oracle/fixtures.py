"""High-precision reference values for the C++ regression fixtures.

Evaluates the cavity kernel directly from its defining formulas with mpmath at
50 significant digits and integrates with tanh-sinh quadrature. This script is
independent of the C++ implementation; its printed values are frozen into
tests/support/fixtures.hpp.

    python3 tests/oracle/fixtures.py
"""
import mpmath as mp

mp.mp.dps = 50

HBAR = mp.mpf("1.054571817e-34")
C = mp.mpf("299792458")


def theta1(r, a, R, phi):
    num = -(r + a * mp.sin(phi) - R * mp.cos(2 * phi))
    den = mp.sqrt((a + R * mp.sin(phi) + r * mp.sin(phi)) ** 2
                  + (r * mp.cos(phi) - R * mp.cos(phi)) ** 2)
    return mp.acos(num / den)


def theta2(r, a, phi):
    return mp.acos(-(r + a * mp.sin(phi))
                   / mp.sqrt(a * a + r * r + 2 * r * a * mp.sin(phi)))


def separation(r, a, phi):
    t2 = theta2(r, a, phi)
    return mp.sin(2 * phi - t2) * (a + r * mp.sin(phi)) / mp.sin(phi - t2)


def integrand(t, phi):
    return mp.sin(t - 2 * phi) ** 4 * mp.cos(t - phi)


def A_quad(phi, t1, t2):
    return mp.quad(lambda t: integrand(t, phi), [t1, t2])


def pressure(r, a, R, phi):
    # Integral form: P = -(hbar c pi^2 / 240 s^4) * integral
    t1 = theta1(r, a, R, phi)
    t2 = theta2(r, a, phi)
    s = separation(r, a, phi)
    return -HBAR * C * mp.pi ** 2 / (240 * s ** 4) * A_quad(phi, t1, t2)


def wing_force(a, R, phi, L=1):
    # Split at interior points so tanh-sinh sees smooth pieces.
    pts = [R * k / 8 for k in range(9)]
    return L * mp.quad(lambda r: pressure(r, a, R, phi), pts)


def deg(x):
    return mp.mpf(x) * mp.pi / 180


def show(name, v):
    print(f"{name} = {mp.nstr(v, 20)}")


if __name__ == "__main__":
    a = mp.mpf("4e-9")
    show("theta1(r=5e-9,a=4e-9,R=1e-8,phi=0.1)", theta1(mp.mpf("5e-9"), a, mp.mpf("1e-8"), mp.mpf("0.1")))
    show("theta2(r=5e-9,a=4e-9,phi=0.1)", theta2(mp.mpf("5e-9"), a, mp.mpf("0.1")))
    show("s(r=0,a=4e-9,phi=0.1)", separation(mp.mpf(0), a, mp.mpf("0.1")))
    show("s(r=1e-8,a=4e-9,phi=0.05)", separation(mp.mpf("1e-8"), a, mp.mpf("0.05")))
    show("A(0.1,1.8,2.6)", A_quad(mp.mpf("0.1"), mp.mpf("1.8"), mp.mpf("2.6")))
    show("integrand(2.0,0.1)", integrand(mp.mpf(2), mp.mpf("0.1")))
    show("P(r=5e-9,a=4e-9,R=1e-8,phi=0)", pressure(mp.mpf("5e-9"), a, mp.mpf("1e-8"), mp.mpf(0)))
    show("P(r=5e-9,a=4e-9,R=1e-8,phi=0.0976)", pressure(mp.mpf("5e-9"), a, mp.mpf("1e-8"), mp.mpf("0.0976")))
    show("F(a=4e-9,R=1e-8,phi=0.0976)", wing_force(a, mp.mpf("1e-8"), mp.mpf("0.0976")))
    R = mp.mpf("2.5") * a
    p = deg("5.59")
    Fa = wing_force(a, R, p)
    Fd = wing_force(mp.mpf("1.58") * a, R, p)
    show("F(a=4e-9,R=1e-8,phi=5.59deg)", Fa)
    show("F(sep=1.58a,R=1e-8,phi=5.59deg)", Fd)
    show("F_sum(n=2,d/a=1.58)", 2 * Fa - Fd)
    show("Q(n=2,d/a=1.58)", (2 * Fa - Fd) / (2 * (a + 2 * R * mp.tan(p)) + mp.mpf("1.58") * a))
    show("Q(asym,d/a=1.58)", (Fa - Fd) / (a + 2 * R * mp.tan(p) + mp.mpf("1.58") * a))
