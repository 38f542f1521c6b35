//! Resultants and integer root finding for multivariate polynomials.

use super::gcd::gcd;
use super::poly::Polynomial;
use super::symbol::Var;
use super::unipoly::UniPoly;

/// Determinant by fraction-free elimination.
pub fn determinant(mut m: Vec<Vec<Polynomial>>) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return Polynomial::one();
    }
    let mut prev = Polynomial::one();
    let mut sign = false;
    for c in 0..n {
        let pivot = (c..n)
            .filter(|&r| !m[r][c].is_zero())
            .min_by_key(|&r| m[r][c].len());
        let Some(p) = pivot else {
            return Polynomial::zero();
        };
        if p != c {
            m.swap(p, c);
            sign = !sign;
        }
        for r in c + 1..n {
            for j in c + 1..n {
                let t = &(&m[c][c] * &m[r][j]) - &(&m[r][c] * &m[c][j]);
                m[r][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[r][c] = Polynomial::zero();
        }
        prev = m[c][c].clone();
    }
    if sign {
        -prev
    } else {
        prev
    }
}

/// Resultant of `p` and `q` with respect to `v`, via the Sylvester matrix.
pub fn resultant(p: &Polynomial, q: &Polynomial, v: Var) -> Polynomial {
    if p.is_zero() || q.is_zero() {
        return Polynomial::zero();
    }
    let a = p.coeffs_in(v);
    let b = q.coeffs_in(v);
    let (dp, dq) = (a.len() - 1, b.len() - 1);
    if dp == 0 {
        return a[0].pow(dq as u32);
    }
    if dq == 0 {
        return b[0].pow(dp as u32);
    }
    let n = dp + dq;
    let mut m = vec![vec![Polynomial::zero(); n]; n];
    for i in 0..dq {
        for (j, c) in a.iter().rev().enumerate() {
            m[i][i + j] = c.clone();
        }
    }
    for i in 0..dp {
        for (j, c) in b.iter().rev().enumerate() {
            m[dq + i][i + j] = c.clone();
        }
    }
    determinant(m)
}

/// Nonnegative integers `h` with `p(h) = 0` identically in the other
/// symbols. The zero polynomial yields no roots.
pub fn nonneg_integer_roots(p: &Polynomial, v: Var) -> Vec<u64> {
    if p.is_zero() || !p.contains(v) {
        return Vec::new();
    }
    let others: Vec<Var> = p.vars().into_iter().filter(|&w| w != v).collect();
    let univariate = if others.is_empty() {
        p.clone()
    } else {
        p.coefficients_wrt(&others)
            .values()
            .fold(Polynomial::zero(), |g, c| gcd(&g, c))
    };
    match UniPoly::from_poly(&univariate, v) {
        Some(u) if !u.is_zero() && u.degree() > 0 => u.nonneg_integer_roots(),
        _ => Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(name: &str) -> Polynomial {
        Polynomial::var(Var::new(name))
    }

    fn int(c: i64) -> Polynomial {
        Polynomial::integer(c)
    }

    #[test]
    fn dispersion_resultant() {
        let (k, h) = (v("k"), v("h"));
        let kv = Var::new("k");
        let hv = Var::new("h");
        // A = (k+1)(k+4), B(k+h) = (k+h)(k+h+2)
        let a = &(&k + &int(1)) * &(&k + &int(4));
        let b = &(&k + &h) * &(&(&k + &h) + &int(2));
        let r = resultant(&a, &b, kv);
        assert_eq!(nonneg_integer_roots(&r, hv), vec![1, 2, 4]);
    }

    #[test]
    fn parametric_roots() {
        let (h, a) = (v("h"), v("a"));
        let hv = Var::new("h");
        let p = &(&(&h - &int(3)) * &(&h + &a)) * &(&h - &int(5));
        assert_eq!(nonneg_integer_roots(&p, hv), vec![3, 5]);
    }

    #[test]
    fn determinant_small() {
        let x = v("x");
        let m = vec![
            vec![x.clone(), int(1)],
            vec![int(1), x.clone()],
        ];
        assert_eq!(determinant(m), &(&x * &x) - &int(1));
    }
}
