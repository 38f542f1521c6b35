//! Fraction-free Gauss–Jordan elimination and parametrized solution spaces.
//!
//! Entries are polynomials in the parameters. Elimination divides only by
//! the previous pivot, so every intermediate entry is a minor of the input
//! and stays polynomial. On completion every pivot equals the same
//! determinant `D` and each bound unknown is `-(Σ N_f x_f) / D` over the
//! free unknowns `x_f`.

use std::collections::{BTreeMap, HashMap};

use super::gcd::gcd_bounded;
use super::poly::Polynomial;
use super::ratfun::RationalFunction;

/// Dense row-major matrix of polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    pub rows: Vec<Vec<Polynomial>>,
    pub cols: usize,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows: vec![vec![Polynomial::zero(); cols]; rows],
            cols,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Polynomial>>, cols: usize) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == cols));
        Matrix { rows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// Drops rows that are identically zero or repeat an earlier row.
    pub fn prune(&mut self) {
        let mut seen: Vec<Vec<Polynomial>> = Vec::new();
        self.rows.retain(|r| {
            if r.iter().all(|e| e.is_zero()) || seen.contains(r) {
                return false;
            }
            seen.push(r.clone());
            true
        });
    }
}

/// Reduced form produced by [`gauss_jordan`].
#[derive(Clone, Debug)]
pub struct Echelon {
    /// `(column, row)` for every pivot, in elimination order.
    pub pivots: Vec<(usize, usize)>,
    /// Common value of all pivots.
    pub det: Polynomial,
    pub rows: Vec<Vec<Polynomial>>,
    pub free: Vec<usize>,
}

/// Eliminates columns in the given `order`; columns missing from `order`
/// are treated last in index order.
pub fn gauss_jordan(m: &Matrix, order: &[usize]) -> Echelon {
    let mut cols: Vec<usize> = order.to_vec();
    for c in 0..m.cols {
        if !cols.contains(&c) {
            cols.push(c);
        }
    }
    eliminate(m, &cols).0
}

/// Eliminates only the columns in `cols`. Returns the echelon restricted to
/// those columns and the remaining rows, which vanish on every pivot column.
/// `free` lists the columns of `cols` that received no pivot.
pub fn eliminate(m: &Matrix, cols: &[usize]) -> (Echelon, Vec<Vec<Polynomial>>) {
    let mut rows = m.rows.clone();
    rows.retain(|r| r.iter().any(|e| !e.is_zero()));
    let mut prev = Polynomial::one();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut free = Vec::new();
    let mut r = 0;
    for &c in cols {
        let pivot = (r..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| (rows[i][c].len(), rows[i][c].total_degree()));
        let Some(p) = pivot else {
            free.push(c);
            continue;
        };
        rows.swap(p, r);
        let pr = rows[r].clone();
        let pv = pr[c].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let f = row[c].clone();
            for j in 0..m.cols {
                if j == c {
                    continue;
                }
                if f.is_zero() && prev.is_one() {
                    row[j] = &pv * &row[j];
                    continue;
                }
                let t = &(&pv * &row[j]) - &(&f * &pr[j]);
                row[j] = if prev.is_one() {
                    t
                } else {
                    t.div_exact(&prev).expect("fraction-free division is exact")
                };
            }
            row[c] = Polynomial::zero();
        }
        prev = pv;
        pivots.push((c, r));
        r += 1;
    }
    let mut rest = rows.split_off(r);
    rest.retain(|row| row.iter().any(|e| !e.is_zero()));
    free.sort_unstable();
    (
        Echelon {
            pivots,
            det: prev,
            rows,
            free,
        },
        rest,
    )
}

/// Linear combination of free unknowns with rational-function coefficients.
pub type LinearForm = BTreeMap<usize, RationalFunction>;

/// General solution of a homogeneous linear system.
#[derive(Clone, Debug, PartialEq)]
pub struct SolutionSpace {
    pub unknowns: usize,
    pub free: Vec<usize>,
    /// Each bound unknown as a form in the free ones.
    pub bound: BTreeMap<usize, LinearForm>,
}

impl SolutionSpace {
    pub fn from_echelon(e: &Echelon, unknowns: usize) -> Self {
        let mut bound = BTreeMap::new();
        for &(c, r) in &e.pivots {
            let mut form = LinearForm::new();
            for &f in &e.free {
                let n = &e.rows[r][f];
                if n.is_zero() {
                    continue;
                }
                let coeff = RationalFunction::new(-n, e.det.clone()).expect("nonzero pivot");
                form.insert(f, coeff);
            }
            bound.insert(c, form);
        }
        SolutionSpace {
            unknowns,
            free: e.free.clone(),
            bound,
        }
    }

    pub fn dimension(&self) -> usize {
        self.free.len()
    }

    /// Value of unknown `j` as a form in the free unknowns.
    pub fn form(&self, j: usize) -> LinearForm {
        if let Some(f) = self.bound.get(&j) {
            return f.clone();
        }
        let mut f = LinearForm::new();
        f.insert(j, RationalFunction::one());
        f
    }

    /// Evaluates every unknown at the given free values (missing ones are 0).
    pub fn instantiate(&self, values: &HashMap<usize, RationalFunction>) -> Vec<RationalFunction> {
        (0..self.unknowns)
            .map(|j| {
                self.form(j)
                    .iter()
                    .filter_map(|(f, c)| values.get(f).map(|v| c * v))
                    .fold(RationalFunction::zero(), |acc, t| &acc + &t)
            })
            .collect()
    }
}

/// Nullspace of `m` with columns eliminated in `order`.
pub fn nullspace(m: &Matrix, order: &[usize]) -> SolutionSpace {
    SolutionSpace::from_echelon(&gauss_jordan(m, order), m.cols)
}

/// Nullspace by Gauss–Jordan elimination that keeps every row primitive:
/// after each update a row is divided by the gcd of its entries. Slower per
/// step than [`nullspace`] but intermediate entries stay small when rows
/// share factors.
pub fn nullspace_reduced(m: &Matrix, order: &[usize]) -> SolutionSpace {
    // Column j is divided by g_j, which scales unknown j by g_j.
    let col_gcd: Vec<Polynomial> = (0..m.cols)
        .map(|j| {
            let column: Vec<Polynomial> = m.rows.iter().map(|r| r[j].clone()).collect();
            let mut g = common_factor(&column);
            if g.is_zero() {
                g = Polynomial::one();
            }
            g
        })
        .collect();
    let mut rows: Vec<Vec<Polynomial>> = m
        .rows
        .iter()
        .filter(|r| r.iter().any(|e| !e.is_zero()))
        .map(|r| {
            let scaled: Vec<Polynomial> = r
                .iter()
                .zip(&col_gcd)
                .map(|(e, g)| e.div_exact(g).expect("column gcd divides"))
                .collect();
            primitive_row(&scaled)
        })
        .collect();
    let mut cols: Vec<usize> = order.to_vec();
    for c in 0..m.cols {
        if !cols.contains(&c) {
            cols.push(c);
        }
    }
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut free = Vec::new();
    let mut r = 0;
    for &c in &cols {
        let pivot = (r..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| (rows[i][c].len(), rows[i][c].total_degree()));
        let Some(p) = pivot else {
            free.push(c);
            continue;
        };
        rows.swap(p, r);
        let pr = rows[r].clone();
        let pv = pr[c].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let g = gcd_bounded(&pv, &row[c], GCD_BUDGET);
            let (sp, sf) = (
                pv.div_exact(&g).expect("gcd divides"),
                row[c].div_exact(&g).expect("gcd divides"),
            );
            let next: Vec<Polynomial> = (0..m.cols)
                .map(|j| {
                    if j == c {
                        Polynomial::zero()
                    } else {
                        &(&sp * &row[j]) - &(&sf * &pr[j])
                    }
                })
                .collect();
            *row = primitive_row(&next);
        }
        pivots.push((c, r));
        r += 1;
    }
    rows.truncate(r);
    free.sort_unstable();
    let mut bound = BTreeMap::new();
    for &(c, r) in &pivots {
        let mut form = LinearForm::new();
        for &f in &free {
            let n = &rows[r][f];
            if n.is_zero() {
                continue;
            }
            let coeff = RationalFunction::new(&-n * &col_gcd[f], &rows[r][c] * &col_gcd[c])
                .expect("nonzero pivot");
            form.insert(f, coeff);
        }
        bound.insert(c, form);
    }
    SolutionSpace {
        unknowns: m.cols,
        free,
        bound,
    }
}

const GCD_BUDGET: usize = 2000;

/// Gcd of the entries, or zero when all vanish.
fn common_factor(entries: &[Polynomial]) -> Polynomial {
    let mut entries: Vec<&Polynomial> = entries.iter().filter(|e| !e.is_zero()).collect();
    entries.sort_by_key(|e| e.len());
    let mut g = Polynomial::zero();
    for e in entries {
        g = gcd_bounded(&g, e, GCD_BUDGET);
        if g.is_constant() {
            break;
        }
    }
    g
}

/// The row divided by the gcd and the rational content of its entries.
pub fn primitive_row(row: &[Polynomial]) -> Vec<Polynomial> {
    let g = common_factor(row);
    if g.is_zero() {
        return row.to_vec();
    }
    let divided: Vec<Polynomial> = row
        .iter()
        .map(|e| e.div_exact(&g).expect("gcd divides"))
        .collect();
    let content = divided
        .iter()
        .filter(|e| !e.is_zero())
        .map(|e| e.content())
        .reduce(|a, b| {
            use num_integer::Integer;
            crate::Rational::new(a.numer().gcd(b.numer()), a.denom().lcm(b.denom()))
        })
        .expect("nonzero row");
    divided.iter().map(|e| e.scale(&content.recip())).collect()
}
