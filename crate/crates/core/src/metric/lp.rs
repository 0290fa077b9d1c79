//! Exact feasibility of `A x = b, x >= 0` by the phase-one simplex method
//! over arbitrary-precision rationals, with Bland's rule for termination.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Outcome of [`feasibility`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    /// A nonnegative solution `x` of `A x = b`.
    Feasible(Vec<BigRational>),
    /// A vector `y` with `y·A <= 0` column by column and `y·b > 0`.
    Infeasible(Vec<BigRational>),
}

/// Decides `A x = b, x >= 0` exactly. `a` holds the rows of `A`.
pub fn feasibility(a: &[Vec<BigRational>], b: &[BigRational]) -> Feasibility {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    assert_eq!(rows, b.len(), "one right-hand side per row");
    let width = cols + rows + 1;
    let rhs = width - 1;

    // rows with negative right-hand side are negated so artificials start feasible
    let flipped: Vec<bool> = b.iter().map(Signed::is_negative).collect();
    let mut tableau: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| {
            let sign = if flipped[i] { -BigRational::one() } else { BigRational::one() };
            let mut row: Vec<BigRational> = a[i].iter().map(|x| x * &sign).collect();
            row.extend((0..rows).map(|k| if k == i { BigRational::one() } else { BigRational::zero() }));
            row.push(&b[i] * &sign);
            row
        })
        .collect();
    let mut basis: Vec<usize> = (cols..cols + rows).collect();

    // reduced costs of "minimize the sum of artificials"; last entry is -objective
    let mut costs = vec![BigRational::zero(); width];
    for row in &tableau {
        for j in (0..cols).chain([rhs]) {
            costs[j] -= &row[j];
        }
    }

    while let Some(enter) = (0..rhs).find(|&j| costs[j].is_negative()) {
        let leave = (0..rows)
            .filter(|&i| tableau[i][enter].is_positive())
            .min_by(|&i, &k| {
                let ri = &tableau[i][rhs] / &tableau[i][enter];
                let rk = &tableau[k][rhs] / &tableau[k][enter];
                ri.cmp(&rk).then(basis[i].cmp(&basis[k]))
            })
            .expect("phase-one objective is bounded below");
        pivot(&mut tableau, &mut costs, leave, enter);
        basis[leave] = enter;
    }

    if costs[rhs].is_zero() {
        let mut x = vec![BigRational::zero(); cols];
        for (i, &j) in basis.iter().enumerate() {
            if j < cols {
                x[j] = tableau[i][rhs].clone();
            }
        }
        Feasibility::Feasible(x)
    } else {
        // reduced cost of artificial k is 1 - y_k
        let y = (0..rows)
            .map(|k| {
                let yk = BigRational::one() - &costs[cols + k];
                if flipped[k] {
                    -yk
                } else {
                    yk
                }
            })
            .collect();
        Feasibility::Infeasible(y)
    }
}

fn pivot(tableau: &mut [Vec<BigRational>], costs: &mut [BigRational], row: usize, col: usize) {
    let scale = tableau[row][col].clone();
    for x in tableau[row].iter_mut() {
        if !x.is_zero() {
            *x /= &scale;
        }
    }
    let pivot_row = tableau[row].clone();
    let support: Vec<usize> = (0..pivot_row.len()).filter(|&j| !pivot_row[j].is_zero()).collect();
    let eliminate = |target: &mut Vec<BigRational>| {
        let factor = target[col].clone();
        if factor.is_zero() {
            return;
        }
        for &j in &support {
            let delta = &factor * &pivot_row[j];
            target[j] -= delta;
        }
    };
    for (i, target) in tableau.iter_mut().enumerate() {
        if i != row {
            eliminate(target);
        }
    }
    let mut cost_row = costs.to_vec();
    eliminate(&mut cost_row);
    costs.clone_from_slice(&cost_row);
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn rows(data: &[&[i64]]) -> Vec<Vec<BigRational>> {
        data.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn feasible_system() {
        // x + y = 3, x - y = 1
        let a = rows(&[&[1, 1], &[1, -1]]);
        let b = vec![q(3), q(1)];
        assert_eq!(feasibility(&a, &b), Feasibility::Feasible(vec![q(2), q(1)]));
    }

    #[test]
    fn negative_rhs() {
        // -x = -2
        let a = rows(&[&[-1]]);
        assert_eq!(feasibility(&a, &[q(-2)]), Feasibility::Feasible(vec![q(2)]));
    }

    #[test]
    fn infeasible_with_certificate() {
        // x + y = 1, x + y = 2
        let a = rows(&[&[1, 1], &[1, 1]]);
        let b = vec![q(1), q(2)];
        let Feasibility::Infeasible(y) = feasibility(&a, &b) else { panic!("expected infeasible") };
        for column in 0..2 {
            let s: BigRational = y.iter().zip(&a).map(|(yi, row)| yi * &row[column]).sum();
            assert!(!s.is_positive());
        }
        let yb: BigRational = (0..2).map(|i| &y[i] * &b[i]).sum();
        assert!(yb.is_positive());
    }

    #[test]
    fn sign_constraint_bites() {
        // x - y = -1 with x, y >= 0 is feasible; x + y = -1 is not
        let a = rows(&[&[1, -1]]);
        assert!(matches!(feasibility(&a, &[q(-1)]), Feasibility::Feasible(_)));
        let a = rows(&[&[1, 1]]);
        assert!(matches!(feasibility(&a, &[q(-1)]), Feasibility::Infeasible(_)));
    }
}
