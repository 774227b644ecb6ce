# Independent golden-value computations (reference oracle, not part of the build).
import numpy as np
from scipy import integrate, optimize
import mpmath as mp
mp.mp.dps = 30

g = 9.81; h0 = 15.0; rho = 1000.0; R = 10.0
ratio = 0.5
k = np.sqrt(3) + 2*np.pi/3 - 2.0

print("== geometry")
zceq = R/2*(1-ratio)*k
print("z_C_eq(0.5) =", repr(zceq))
print("z_C_eq(0.8) =", repr(R/2*(1-0.8)*k))
print("V(R=10) =", repr(R*R*k))
print("V(R=1)  =", repr(k))
print("zeta_w(x0) =", repr(zceq + R - 2*R))
print("zeta_w(x0+R) =", repr(zceq + R - np.sqrt(3)*R))

# hull: zeta_w_eq(s) = zceq + R - sqrt(4R^2 - s^2), s = x-x0, h_w = h0 + zeta_w_eq + delta
def zw(s): return zceq + R - np.sqrt(4*R*R - s*s)
def hw(s, d=0.0): return h0 + zw(s) + d

print("== quadratures (delta=0, ratio=0.5, R=10)")
alpha0, err = integrate.quad(lambda s: 1.0/hw(s), -R, R, epsabs=1e-13, epsrel=1e-13)
print("alpha(0) =", repr(alpha0), "err", err)
I2, _ = integrate.quad(lambda s: s*s/hw(s), -R, R, epsabs=1e-13, epsrel=1e-13)
ma0 = rho*(I2 - 0.0)  # I1 = 0 by symmetry; m_a = rho*(I2 - I1^2/I0)
print("m_a(0) =", repr(ma0))
varx = I2/alpha0
print("Var(x)(0) =", repr(varx))
def hwp(s): return s/np.sqrt(4*R*R - s*s)
def beta_integrand(s):
    return s/hw(s) * (2*s/hw(s) - s*s*hwp(s)/hw(s)**2)
beta0, _ = integrate.quad(beta_integrand, -R, R, epsabs=1e-13, epsrel=1e-13)
beta0 *= rho
print("beta(0) =", repr(beta0))
m = rho*ratio*(R*R*k)
print("mass =", repr(m))
c_stiff = rho*g*2*R
print("stiffness =", repr(c_stiff))
print("gamma_lin = ", repr(rho*g*(2*R)**2/(2*np.sqrt(g*h0))))

print("== riemann, h=16,q=3,h0=15")
h=16.0;q=3.0
Rv = q/h + 2*(np.sqrt(g*h)-np.sqrt(g*h0))
Lv = q/h - 2*(np.sqrt(g*h)-np.sqrt(g*h0))
print("R =", repr(Rv)); print("L =", repr(Lv))

print("== tau0 cubic, h0=15")
r0 = 4.0/27.0*h0**1.5
print("r0 =", repr(r0))
s0 = np.sqrt(h0)
def cubic(tau, r): return tau**3 - s0*tau**2 + r
for r in [-1.0, 0.25*r0, 0.5*r0, 0.9*r0, 0.999*r0]:
    # tau0 = larger positive root; bracket [2s/3, s+|r|]
    lo, hi = 2*s0/3, s0 + abs(r) + 1.0
    tau = optimize.brentq(lambda t: cubic(t, r), lo, hi, xtol=1e-15, rtol=8.9e-16)
    print(f"tau0({r!r}) =", repr(tau))
print("tau0_at_r0 =", repr(2*s0/3))

print("== solitary a=3")
a=3.0
K = np.sqrt(9*a/(12*h0**3 + 4*a*h0*h0))
c = np.sqrt(g*h0/(1 - 4*h0*h0*K*K/3))
print("K =", repr(K)); print("c =", repr(c))

print("== GL15 nodes/weights")
x, w = np.polynomial.legendre.leggauss(15)
for xi, wi in zip(x, w):
    print(f"({xi!r}, {wi!r}),")
