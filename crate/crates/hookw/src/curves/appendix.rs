//! Polynomial data of the explicit 2B truncation curve and of its
//! intersection point with the type-C principal curves.
//!
//! The strings are entered once, verbatim, and guarded by checksum tests
//! (`f(1) = −147`, `g(1) = −21`, `h(1) = −49` at `n = m = 0`, and the
//! trivariate intersection-point identity).

/// The polynomial `f(ψ; n, m)` in the numerator of `λ` along the curve.
pub(crate) const CURVE_F: &str = "\
    -19*m + 80*m^3 - 16*m^5 + 19*n - 240*m^2*n + 80*m^4*n + 240*m*n^2 - 160*m^3*n^2 - 80*n^3 \
    + 160*m^2*n^3 - 80*m*n^4 + 16*n^5 + 49*psi + 114*m*psi - 364*m^2*psi - 640*m^3*psi \
    + 160*m^5*psi - 76*n*psi + 728*m*n*psi + 1440*m^2*n*psi - 640*m^4*n*psi - 364*n^2*psi \
    - 960*m*n^2*psi + 960*m^3*n^2*psi + 160*n^3*psi - 640*m^2*n^3*psi + 160*m*n^4*psi \
    - 196*psi^2 - 380*m*psi^2 + 2184*m^2*psi^2 + 2240*m^3*psi^2 - 640*m^5*psi^2 \
    + 228*n*psi^2 - 2912*m*n*psi^2 - 3840*m^2*n*psi^2 + 1920*m^4*n*psi^2 + 728*n^2*psi^2 \
    + 1920*m*n^2*psi^2 - 1920*m^3*n^2*psi^2 - 320*n^3*psi^2 + 640*m^2*n^3*psi^2 + 392*psi^3 \
    + 760*m*psi^3 - 4368*m^2*psi^3 - 4480*m^3*psi^3 + 1280*m^5*psi^3 - 304*n*psi^3 \
    + 2912*m*n*psi^3 + 5760*m^2*n*psi^3 - 2560*m^4*n*psi^3 - 1920*m*n^2*psi^3 \
    + 1280*m^3*n^2*psi^3 - 392*psi^4 - 912*m*psi^4 + 2912*m^2*psi^4 + 5120*m^3*psi^4 \
    - 1280*m^5*psi^4 + 304*n*psi^4 - 3840*m^2*n*psi^4 + 1280*m^4*n*psi^4 + 608*m*psi^5 \
    - 2560*m^3*psi^5 + 512*m^5*psi^5";

/// The quadratic factor `g(ψ; n, m)` of the denominator of `λ`.
pub(crate) const CURVE_G: &str = "\
    -7 + 4*m^2 - 8*m*n + 4*n^2 + 14*psi - 16*m^2*psi + 16*m*n*psi - 28*psi^2 + 16*m^2*psi^2";

/// The cubic factor `h(ψ; n, m)` of the denominator of `λ`.
pub(crate) const CURVE_H: &str = "\
    5*m - 20*m^3 - 5*n + 60*m^2*n - 60*m*n^2 + 20*n^3 + 49*psi - 20*m*psi + 120*m^3*psi \
    + 10*n*psi - 240*m^2*n*psi + 120*m*n^2*psi - 98*psi^2 + 40*m*psi^2 - 240*m^3*psi^2 \
    - 20*n*psi^2 + 240*m^2*n*psi^2 - 40*m*psi^3 + 160*m^3*psi^3";

/// Numerator polynomial `f(n, m, r)` of `λ` at the intersection point.
pub(crate) const POINT_F: &str = "\
    -68*n - 408*m*n - 816*m^2*n - 544*m^3*n + 136*n^2 + 544*m*n^2 + 544*m^2*n^2 + 96*n^3 \
    + 192*m*n^3 - 49*r - 256*m*r - 360*m^2*r + 64*m^3*r + 304*m^4*r - 212*n*r - 1000*m*n*r \
    - 1456*m^2*n*r - 608*m^3*n*r + 92*n^2*r - 1296*m*n^2*r - 2960*m^2*n^2*r + 1824*n^3*r \
    + 3264*m*n^3*r - 576*n^4*r - 196*r^2 - 632*m*r^2 - 176*m^2*r^2 + 608*m^3*r^2 - 772*n*r^2 \
    - 3000*m*n*r^2 - 496*m^2*n*r^2 + 4832*m^3*n*r^2 + 640*n^2*r^2 - 5792*m*n^2*r^2 \
    - 9664*m^2*n^2*r^2 + 4176*n^3*r^2 + 6432*m*n^3*r^2 - 1600*n^4*r^2 - 392*r^3 - 328*m*r^3 \
    + 2368*m^2*r^3 + 2272*m^3*r^3 - 1280*m^4*r^3 - 1544*n*r^3 - 5824*m*n*r^3 + 928*m^2*n*r^3 \
    + 3840*m^3*n*r^3 + 2240*n^2*r^3 - 4512*m*n^2*r^3 - 4480*m^2*n^2*r^3 + 1312*n^3*r^3 \
    + 2560*m*n^3*r^3 - 640*n^4*r^3 - 392*r^4 + 608*m*r^4 + 2912*m^2*r^4 - 1280*m^3*r^4 \
    - 912*n*r^4 - 2784*m*n*r^4 + 1600*m^2*n*r^4 - 640*m^3*n*r^4 - 128*n^2*r^4 \
    + 640*m*n^2*r^4 + 1920*m^2*n^2*r^4 - 960*n^3*r^4 - 1920*m*n^3*r^4 + 640*n^4*r^4 \
    + 608*m*r^5 - 1216*m^2*r^5 - 128*m^3*r^5 + 256*m^4*r^5 - 608*n*r^5 + 2432*m*n*r^5 \
    + 384*m^2*n*r^5 - 1024*m^3*n*r^5 - 1216*n^2*r^5 - 384*m*n^2*r^5 + 1536*m^2*n^2*r^5 \
    + 128*n^3*r^5 - 1024*m*n^3*r^5 + 256*n^4*r^5";

/// First denominator factor `g(n, m, r)` of `λ` at the intersection point.
pub(crate) const POINT_G: &str = "\
    -7 - 28*m - 28*m^2 + 14*n + 28*m*n - 24*n^2 - 14*r - 28*m*r - 28*n*r - 16*m*n*r \
    + 16*n^2*r - 28*r^2 + 16*m^2*r^2 - 32*m*n*r^2 + 16*n^2*r^2";

/// Second denominator factor `h(n, m, r)` of `λ` at the intersection point.
pub(crate) const POINT_H: &str = "\
    -44*n - 88*m*n - 49*r - 108*m*r - 20*m^2*r - 78*n*r + 20*m*n*r + 40*n^2*r - 98*r^2 \
    - 20*m*r^2 + 40*n*r^2 - 120*m*n*r^2 + 120*n^2*r^2 - 40*m*r^3 + 80*m^2*r^3 + 40*n*r^3 \
    - 160*m*n*r^3 + 80*n^2*r^3";
