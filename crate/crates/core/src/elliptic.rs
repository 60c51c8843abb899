//! Real-argument Jacobi elliptic functions, complete and incomplete integrals.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, PI};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JacobiTriple {
    pub sn: f64,
    pub cn: f64,
    pub dn: f64,
}

/// `sn(iu; k)`, `cn(iu; k)`, `dn(iu; k)`: the first is purely imaginary, the others real.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ImaginaryValues {
    pub sn_imag: f64,
    pub cn_real: f64,
    pub dn_real: f64,
}

fn check_modulus(k: f64) -> Result<()> {
    if (0.0..1.0).contains(&k) {
        Ok(())
    } else {
        Err(Error::ModulusOutOfRange(k))
    }
}

pub fn complementary(k: f64) -> f64 {
    ((1.0 - k) * (1.0 + k)).sqrt()
}

fn agm(mut a: f64, mut b: f64) -> f64 {
    for _ in 0..64 {
        if (a - b).abs() <= f64::EPSILON * a {
            break;
        }
        let next = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = next;
    }
    0.5 * (a + b)
}

/// `K(k)` for `0 ≤ k < 1`.
pub fn complete_k(k: f64) -> Result<f64> {
    check_modulus(k)?;
    Ok(FRAC_PI_2 / agm(1.0, complementary(k)))
}

/// `(K(k), K(k′))`; `K′` is infinite at `k = 0`.
pub fn complete_integrals(k: f64) -> Result<(f64, f64)> {
    check_modulus(k)?;
    let kp = if k == 0.0 {
        f64::INFINITY
    } else {
        FRAC_PI_2 / agm(1.0, k)
    };
    Ok((complete_k(k)?, kp))
}

/// `sn`, `cn`, `dn` by the descending AGM ladder.
pub fn jacobi(t: f64, k: f64) -> Result<JacobiTriple> {
    check_modulus(k)?;
    if k == 0.0 {
        return Ok(JacobiTriple {
            sn: t.sin(),
            cn: t.cos(),
            dn: 1.0,
        });
    }
    // Reduce to one real period for accuracy at large |t|.
    let period = 4.0 * complete_k(k)?;
    let t = t - period * (t / period).round();
    let mut a = [0.0f64; 32];
    let mut c = [0.0f64; 32];
    a[0] = 1.0;
    let mut b = complementary(k);
    c[0] = k;
    let mut n = 0;
    while c[n].abs() > f64::EPSILON * a[n] && n < 31 {
        a[n + 1] = 0.5 * (a[n] + b);
        c[n + 1] = 0.5 * (a[n] - b);
        b = (a[n] * b).sqrt();
        n += 1;
    }
    let mut phi = (1u64 << n) as f64 * a[n] * t;
    for j in (1..=n).rev() {
        phi = 0.5 * (phi + (c[j] / a[j] * phi.sin()).asin());
    }
    let (sn, cn) = phi.sin_cos();
    // dn² = k′² + k²cn² has no cancellation for real arguments.
    let kc = complementary(k);
    let dn = (kc * kc + k * k * cn * cn).sqrt();
    Ok(JacobiTriple { sn, cn, dn })
}

/// Carlson's symmetric integral `R_F(x, y, z)`.
pub fn carlson_rf(x: f64, y: f64, z: f64) -> f64 {
    let (mut x, mut y, mut z) = (x, y, z);
    for _ in 0..100 {
        let mu = (x + y + z) / 3.0;
        let dx = 1.0 - x / mu;
        let dy = 1.0 - y / mu;
        let dz = 1.0 - z / mu;
        if dx.abs().max(dy.abs()).max(dz.abs()) < 1e-4 {
            let e2 = dx * dy - dz * dz;
            let e3 = dx * dy * dz;
            return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0)
                / mu.sqrt();
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lambda = sx * (sy + sz) + sy * sz;
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
    }
    1.0 / ((x + y + z) / 3.0).sqrt()
}

/// Incomplete integral `F(φ, k)` for any real amplitude.
pub fn incomplete_f(phi: f64, k: f64) -> Result<f64> {
    check_modulus(k)?;
    let m = (phi / PI).round();
    let r = phi - m * PI;
    let (s, c) = r.sin_cos();
    let f = s * carlson_rf(c * c, (1.0 - k * s) * (1.0 + k * s), 1.0);
    Ok(if m == 0.0 {
        f
    } else {
        2.0 * m * complete_k(k)? + f
    })
}

/// `t ∈ [0, K]` with `sn(t; k) = w`.
pub fn inverse_sn(w: f64, k: f64) -> Result<f64> {
    check_modulus(k)?;
    if !(0.0..=1.0).contains(&w) {
        return Err(Error::OutOfRange(w));
    }
    if w == 1.0 {
        return complete_k(k);
    }
    let phi = w.atan2(((1.0 - w) * (1.0 + w)).sqrt());
    let mut t = incomplete_f(phi, k)?;
    for _ in 0..3 {
        let j = jacobi(t, k)?;
        let slope = j.cn * j.dn;
        if slope < 1e-3 {
            break;
        }
        let step = (j.sn - w) / slope;
        t -= step;
        if step.abs() < 1e-17 {
            break;
        }
    }
    Ok(t)
}

/// Jacobi's imaginary transformation, through functions of the complementary modulus.
pub fn imaginary_transform(u: f64, k: f64) -> Result<ImaginaryValues> {
    check_modulus(k)?;
    let kc = complementary(k);
    if kc >= 1.0 {
        return Err(Error::ModulusOutOfRange(kc));
    }
    let j = jacobi(u, kc)?;
    if j.cn.abs() < 1e-15 {
        return Err(Error::PoleAt(u));
    }
    Ok(ImaginaryValues {
        sn_imag: j.sn / j.cn,
        cn_real: 1.0 / j.cn,
        dn_real: j.dn / j.cn,
    })
}

/// `R_n(t)` with `R_n(cn(σ; κ)) = cn(nσ; κ)`.
pub fn cn_multiple_angle(t: f64, n: u32, kappa: f64) -> Result<f64> {
    check_modulus(kappa)?;
    if n == 0 {
        return Ok(1.0);
    }
    let (mut prev, mut cur) = (1.0, t);
    let q = kappa * kappa * (1.0 - t * t);
    for step in 1..n {
        let den = 1.0 - q * (1.0 - cur * cur);
        if den.abs() < 1e-300 {
            return Err(Error::RecursionPole(step as usize));
        }
        let next = 2.0 * t * cur / den - prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}
