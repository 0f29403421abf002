//! Quadrature rules on the reference triangle and the reference edge.
//!
//! Triangle rules come from a Gauss-Legendre tensor product collapsed onto the
//! triangle (Duffy transform), which is exact for any requested total degree;
//! all weights stay positive.

use crate::error::{Error, Result};

/// Degrees above this are rejected; every form in the crate needs far less
/// (assembly needs at most `2*l_max + 4` with `l_max = 4`).
pub const MAX_DEGREE: usize = 60;

/// Points and positive weights, exact for polynomials up to `exact_degree`.
#[derive(Debug, Clone)]
pub struct QuadRule {
    /// Reference coordinates; `[x, y]` on the triangle, `[s, 0]` on the edge.
    pub points: Vec<[f64; 2]>,
    pub weights: Vec<f64>,
    pub exact_degree: usize,
}

impl QuadRule {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton iteration.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        // Newton on P_n(x) = 0
        for _ in 0..100 {
            let (p, dp) = legendre_with_derivative(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(n, x);
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    nodes.reverse();
    weights.reverse();
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Gauss-Legendre rule on [0, 1] with `n` points (exact to degree 2n - 1).
fn gauss_01(n: usize) -> (Vec<f64>, Vec<f64>) {
    let (xs, ws) = gauss_legendre(n);
    (
        xs.iter().map(|x| 0.5 * (x + 1.0)).collect(),
        ws.iter().map(|w| 0.5 * w).collect(),
    )
}

/// Rule on the reference edge [0, 1], exact for polynomials up to `degree`.
pub fn edge_rule(degree: usize) -> Result<QuadRule> {
    if degree > MAX_DEGREE {
        return Err(Error::UnsupportedDegree {
            requested: degree,
            max: MAX_DEGREE,
        });
    }
    let n = degree / 2 + 1;
    let (xs, ws) = gauss_01(n);
    Ok(QuadRule {
        points: xs.iter().map(|&s| [s, 0.0]).collect(),
        weights: ws,
        exact_degree: degree,
    })
}

/// Rule on the reference triangle {(0,0), (1,0), (0,1)}, exact for total
/// degree `degree`.
pub fn triangle_rule(degree: usize) -> Result<QuadRule> {
    if degree > MAX_DEGREE {
        return Err(Error::UnsupportedDegree {
            requested: degree,
            max: MAX_DEGREE,
        });
    }
    // Duffy map x = u, y = v (1 - u), Jacobian (1 - u): the u-integrand has
    // degree `degree + 1`, the v-integrand `degree`.
    let nu = (degree + 1) / 2 + 1;
    let nv = degree / 2 + 1;
    let (us, wu) = gauss_01(nu);
    let (vs, wv) = gauss_01(nv);
    let mut points = Vec::with_capacity(nu * nv);
    let mut weights = Vec::with_capacity(nu * nv);
    for (u, cu) in us.iter().zip(&wu) {
        for (v, cv) in vs.iter().zip(&wv) {
            points.push([*u, v * (1.0 - u)]);
            weights.push(cu * cv * (1.0 - u));
        }
    }
    Ok(QuadRule {
        points,
        weights,
        exact_degree: degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exact integral of x^a y^b over the reference triangle: a! b! / (a+b+2)!.
    fn exact_triangle_monomial(a: u32, b: u32) -> f64 {
        let fact = |n: u32| (1..=n).map(|k| k as f64).product::<f64>().max(1.0);
        fact(a) * fact(b) / fact(a + b + 2)
    }

    fn integrate_triangle(rule: &QuadRule, f: impl Fn(f64, f64) -> f64) -> f64 {
        rule.points
            .iter()
            .zip(&rule.weights)
            .map(|(p, w)| w * f(p[0], p[1]))
            .sum()
    }

    #[test]
    fn triangle_weights_sum_to_area() {
        for degree in 0..=16 {
            let rule = triangle_rule(degree).unwrap();
            let sum: f64 = rule.weights.iter().sum();
            assert!((sum - 0.5).abs() < 1e-14, "degree {degree}: sum {sum}");
            assert!(rule.weights.iter().all(|&w| w > 0.0));
        }
    }

    #[test]
    fn edge_weights_sum_to_length() {
        for degree in 0..=16 {
            let rule = edge_rule(degree).unwrap();
            let sum: f64 = rule.weights.iter().sum();
            assert!((sum - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn triangle_rule_degree_zero() {
        let rule = triangle_rule(0).unwrap();
        assert!((integrate_triangle(&rule, |_, _| 1.0) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn edge_rule_cubic() {
        let rule = edge_rule(3).unwrap();
        let val: f64 = rule
            .points
            .iter()
            .zip(&rule.weights)
            .map(|(p, w)| w * p[0].powi(3))
            .sum();
        assert!((val - 0.25).abs() < 1e-14);
    }

    #[test]
    fn triangle_rule_x2y4() {
        // Independent oracle: a! b! / (a+b+2)! gives 2! 4! / 8! = 1/840.
        let exact = exact_triangle_monomial(2, 4);
        assert!((exact - 1.0 / 840.0).abs() < 1e-18);
        let rule = triangle_rule(6).unwrap();
        let val = integrate_triangle(&rule, |x, y| x * x * y.powi(4));
        assert!((val - exact).abs() < 1e-14, "got {val}, want {exact}");
    }

    #[test]
    fn monomial_exactness_up_to_degree() {
        for degree in 0..=14 {
            let rule = triangle_rule(degree).unwrap();
            for a in 0..=degree as u32 {
                for b in 0..=(degree as u32 - a) {
                    let got = integrate_triangle(&rule, |x, y| x.powi(a as i32) * y.powi(b as i32));
                    let want = exact_triangle_monomial(a, b);
                    assert!(
                        (got - want).abs() < 1e-13,
                        "degree {degree} monomial x^{a} y^{b}: {got} vs {want}"
                    );
                }
            }
        }
    }

    #[test]
    fn edge_monomial_exactness() {
        for degree in 0..=14usize {
            let rule = edge_rule(degree).unwrap();
            for a in 0..=degree {
                let got: f64 = rule
                    .points
                    .iter()
                    .zip(&rule.weights)
                    .map(|(p, w)| w * p[0].powi(a as i32))
                    .sum();
                let want = 1.0 / (a as f64 + 1.0);
                assert!((got - want).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn degree_above_maximum_is_rejected() {
        assert!(matches!(
            triangle_rule(MAX_DEGREE + 1),
            Err(Error::UnsupportedDegree { .. })
        ));
        assert!(matches!(
            edge_rule(MAX_DEGREE + 1),
            Err(Error::UnsupportedDegree { .. })
        ));
    }
}
