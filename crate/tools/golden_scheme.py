# Independent hand-evaluation of the discrete source term and one FV step.
import numpy as np
g = 9.81
dx = 0.5
alpha = 0.02          # dt/dx
dt = alpha*dx
jm, jp = 2, 6
zdd = 0.37

h = np.array([15.0, 15.2, 14.9, 13.7, 12.9, 13.3, 14.6, 15.1, 15.0])
q = np.array([0.0, 0.3, -0.2, 0.5, 0.1, -0.4, 0.2, 0.0, 0.1])
N = len(h)-1
x = dx*np.arange(N+1)
ghostL = (15.0, 0.0)   # (h, q)
ghostR = (15.0, 0.1)

def F2(hh, qq): return qq*qq/hh + 0.5*g*hh*hh

# interfaces i = 0..N+1, interface i between cell i-1 and cell i (ghosts at ends)
hs = np.concatenate([[ghostL[0]], h, [ghostR[0]]])
qs = np.concatenate([[ghostL[1]], q, [ghostR[1]]])
f1 = np.zeros(N+2); f2 = np.zeros(N+2)
for i in range(N+2):
    hl, ql, hr, qr = hs[i], qs[i], hs[i+1], qs[i+1]
    # interface i sits between cells i-1 and i
    j = i-1
    interior = (jm <= j < jp)
    f1[i] = 0.5*(qr+ql) - (0.0 if interior else (hr-hl)/(2*alpha))
    f2[i] = 0.5*(F2(hr,qr)+F2(hl,ql)) - (qr-ql)/(2*alpha)

d0f2 = np.array([(f2[j+1]-f2[j])/dx for j in range(N+1)])

# sharp sums over [jm, jp], half weights at ends
wts = np.ones(jp-jm+1); wts[0] = wts[-1] = 0.5
hseg = h[jm:jp+1]
denom = np.sum(wts/hseg)
def avg(f): return np.sum(wts*f[jm:jp+1]/hseg)/denom
xavg = avg(x)
xstar = x[jm:jp+1] - xavg
jump = g*((h[jp]-h[jp-1]) - (h[jm]-h[jm+1]))/(dx*denom)
S = d0f2[jm:jp+1] - avg(d0f2) - zdd*xstar - jump
print("denom(sharp 1/h) =", repr(denom))
print("x_avg =", repr(xavg))
print("avg_d0f2 =", repr(avg(d0f2)))
print("jump =", repr(jump))
print("S =", [repr(v) for v in S])

# one full step
h1 = h - alpha*(f1[1:] - f1[:-1])
q1 = q - alpha*(f2[1:] - f2[:-1])
for j in range(jm, jp+1):
    q1[j] += dt*S[j-jm]
print("h1 =", [repr(v) for v in h1])
print("q1 =", [repr(v) for v in q1])

# F_NL golden on same state: centered D on (jm,jp) exclusive, one-sided at jm, jp
rho = 1000.0; alpha_coef = 1.37
gq = q*q/h
D = np.zeros(N+1)
for j in range(jm+1, jp):
    D[j] = (gq[j+1]-gq[j-1])/(2*dx)
D[jm] = (gq[jm+1]-gq[jm])/dx
D[jp] = (gq[jp]-gq[jp-1])/dx
fnl = rho*alpha_coef*avg(np.array([xstar[j-jm]*D[j] if jm<=j<=jp else 0 for j in range(N+1)]))
# avg expects full array indexable at [jm..jp]; build properly:
prod = np.zeros(N+1)
for j in range(jm, jp+1):
    prod[j] = xstar[j-jm]*D[j]
fnl = rho*alpha_coef*avg(prod)
print("F_NL =", repr(fnl))

# Boussinesq momentum flux variant on a pair, for unit test: h0=15
h0=15.0
def F2B(hh,qq): return qq*qq/h0 + 0.5*g*hh*hh
hl,ql,hr,qr = 16.0,3.0,15.0,0.0
a2 = 0.02
print("F2_nsw(16,3|15,0,a=0.02) =", repr(0.5*(F2(hr,qr)+F2(hl,ql)) - (qr-ql)/(2*a2)))
print("F2_bouss(16,3|15,0,a=0.02) =", repr(0.5*(F2B(hr,qr)+F2B(hl,ql)) - (qr-ql)/(2*a2)))
print("F1_ext(16,3|15,0,a=0.02) =", repr(0.5*(qr+ql) - (hr-hl)/(2*a2)))
