//! Quantum seeds `Σ = (B, Λ, Y)` for the linearly oriented `A_n` quiver and
//! their mutations.
//!
//! A seed couples a skew-symmetric exchange matrix `B`, a skew-symmetric form
//! `Λ` compatible with it (`BᵀΛ = I`), and a cluster of `n` torus elements
//! that pairwise quasi-commute with exponents given by `Λ`:
//! `Y_i Y_j = q^{Λ_{ij}} Y_j Y_i`. Mutation in a direction `k` replaces
//! `Y_k` by a two-term exchange element and updates both matrices; it is an
//! involution.
//!
//! All cluster variables live in one fixed ambient torus — the `T(Λ)` of the
//! initial seed — regardless of how far the seed has mutated; the seed's own
//! `lambda` only tracks the quasi-commutation exponents of the current
//! cluster.

use crate::error::{Error, Result};
use crate::torus::{left_divide, multiply, ExponentVector, LambdaForm, TorusElement};

/// A skew-symmetric integer exchange matrix, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl ExchangeMatrix {
    pub fn new(n: usize, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::RankMismatch { expected: n * n, got: entries.len() });
        }
        let m = ExchangeMatrix { n, entries };
        for i in 1..=n {
            for j in 1..=n {
                if m.entry(i, j) != -m.entry(j, i) {
                    return Err(Error::IndexOutOfRange(format!(
                        "exchange matrix is not skew-symmetric at ({i},{j})"
                    )));
                }
            }
        }
        Ok(m)
    }

    /// The incidence matrix of the linearly oriented `A_n` quiver
    /// `1 → 2 → ⋯ → n`: `b_{i,i+1} = 1`, `b_{i+1,i} = −1`, zero elsewhere.
    pub fn linear_type_a(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRank(n));
        }
        let mut entries = vec![0i64; n * n];
        for i in 1..n {
            entries[(i - 1) * n + i] = 1;
            entries[i * n + (i - 1)] = -1;
        }
        Ok(ExchangeMatrix { n, entries })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Matrix entry `b_{ij}`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (1..=self.n).map(|i| (1..=self.n).map(|j| self.entry(i, j)).collect()).collect()
    }

    /// Standard matrix mutation in direction `k`.
    fn mutated(&self, k: usize) -> Self {
        let n = self.n;
        let mut entries = vec![0i64; n * n];
        for i in 1..=n {
            for j in 1..=n {
                let v = if i == k || j == k {
                    -self.entry(i, j)
                } else {
                    let (bik, bkj) = (self.entry(i, k), self.entry(k, j));
                    self.entry(i, j) + (bik.abs() * bkj + bik * bkj.abs()) / 2
                };
                entries[(i - 1) * n + (j - 1)] = v;
            }
        }
        ExchangeMatrix { n, entries }
    }
}

fn mat_mul(n: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        for t in 0..n {
            let ait = a[i * n + t];
            if ait == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += ait * b[t * n + j];
            }
        }
    }
    out
}

fn mat_transpose(n: usize, a: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        for j in 0..n {
            out[j * n + i] = a[i * n + j];
        }
    }
    out
}

fn is_identity(n: usize, a: &[i64]) -> bool {
    (0..n).all(|i| (0..n).all(|j| a[i * n + j] == i64::from(i == j)))
}

/// Weyl-normalized ordered product.
///
/// Each factor comes with an exponent-vector label; the form evaluated on a
/// pair of labels is the promised quasi-commutation exponent `λ_{ab}` with
/// `Y_a Y_b = q^{λ_{ab}} Y_b Y_a`, which is verified concretely before use.
/// Returns `ν^{−Σ_{a<b} λ_{ab}} · Y_1 Y_2 ⋯ Y_m`; the normalization makes the
/// result independent of the input order. The empty product is 1.
pub fn normalized_product(
    form: &LambdaForm,
    factors: &[(TorusElement, ExponentVector)],
) -> Result<TorusElement> {
    let n = form.rank();
    if factors.is_empty() {
        return Ok(TorusElement::one(n));
    }
    for (a, (ya, la)) in factors.iter().enumerate() {
        for (b, (yb, lb)) in factors.iter().enumerate().skip(a + 1) {
            let lambda_ab = form.eval(la, lb)?;
            let lhs = multiply(form, ya, yb)?;
            let rhs = multiply(form, yb, ya)?.times_nu(2 * lambda_ab);
            if lhs != rhs {
                return Err(Error::NotQuasiCommuting { a, b });
            }
        }
    }
    let mut correction = 0i64;
    for (a, (_, la)) in factors.iter().enumerate() {
        for (_, lb) in factors.iter().skip(a + 1).map(|f| (&f.0, &f.1)) {
            correction += form.eval(la, lb)?;
        }
    }
    let mut product = factors[0].0.clone();
    for (y, _) in &factors[1..] {
        product = multiply(form, &product, y)?;
    }
    Ok(product.times_nu(-correction))
}

/// A quantum seed: exchange matrix, compatible form, and quasi-commuting
/// cluster.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumSeed {
    b: ExchangeMatrix,
    lambda: LambdaForm,
    cluster: Vec<TorusElement>,
}

impl QuantumSeed {
    /// The initial seed for the linearly oriented `A_n` quiver, `n` even:
    /// `B` the incidence matrix, `Λ = (Bᵀ)^{-1}` by the parity closed form,
    /// cluster `(X^{e_1}, …, X^{e_n})`. The constructor re-checks
    /// `Λ·Bᵀ = I`.
    pub fn initial(n: usize) -> Result<Self> {
        let lambda = LambdaForm::linear_type_a(n)?;
        let b = ExchangeMatrix::linear_type_a(n)?;
        let lam_rows: Vec<i64> =
            (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).map(|(i, j)| lambda.entry(i, j)).collect();
        let b_rows: Vec<i64> =
            (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).map(|(i, j)| b.entry(i, j)).collect();
        let product = mat_mul(n, &lam_rows, &mat_transpose(n, &b_rows));
        if !is_identity(n, &product) {
            return Err(Error::IndexOutOfRange(
                "initial form is not the inverse transpose of the exchange matrix".to_string(),
            ));
        }
        let cluster = (1..=n).map(|i| TorusElement::generator(n, i)).collect();
        Ok(QuantumSeed { b, lambda, cluster })
    }

    pub fn rank(&self) -> usize {
        self.b.rank()
    }

    pub fn exchange_matrix(&self) -> &ExchangeMatrix {
        &self.b
    }

    pub fn lambda(&self) -> &LambdaForm {
        &self.lambda
    }

    pub fn cluster(&self) -> &[TorusElement] {
        &self.cluster
    }

    /// The cluster variable `Y_k`, `k` 1-based.
    pub fn variable(&self, k: usize) -> &TorusElement {
        &self.cluster[k - 1]
    }

    /// Compatibility `BᵀΛ = I`, preserved by every mutation.
    pub fn compatibility_holds(&self) -> bool {
        let n = self.rank();
        let b_flat: Vec<i64> =
            (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).map(|(i, j)| self.b.entry(i, j)).collect();
        let l_flat: Vec<i64> =
            (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).map(|(i, j)| self.lambda.entry(i, j)).collect();
        is_identity(n, &mat_mul(n, &mat_transpose(n, &b_flat), &l_flat))
    }

    /// Checks concretely that the cluster pairwise quasi-commutes with the
    /// exponents recorded in the seed's form: `Y_i Y_j = q^{Λ_{ij}} Y_j Y_i`
    /// under the ambient product.
    pub fn cluster_quasi_commutes(&self) -> Result<bool> {
        let ambient = LambdaForm::linear_type_a(self.rank())?;
        for i in 1..=self.rank() {
            for j in (i + 1)..=self.rank() {
                let lhs = multiply(&ambient, self.variable(i), self.variable(j))?;
                let rhs = multiply(&ambient, self.variable(j), self.variable(i))?
                    .times_nu(2 * self.lambda.entry(i, j));
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Mutation in direction `k` (1-based). Returns a new seed; mutation is
    /// an involution, so mutating twice in the same direction returns the
    /// original seed exactly.
    pub fn mutate(&self, k: usize) -> Result<QuantumSeed> {
        let n = self.rank();
        if k < 1 || k > n {
            return Err(Error::DirectionOutOfRange { k, n });
        }
        let ambient = LambdaForm::linear_type_a(n)?;

        // Exchange element. With v± the positive/negative parts of column k
        // of B, the new variable is M(−e_k+v⁺) + M(−e_k+v⁻) in the current
        // frame, where M(−e_k+v) = ν^{Λ(e_k,v)}·Y_k^{-1}·N(v) and N(v) is the
        // normalized product of the Y_i with multiplicities v_i. Multiplying
        // through by Y_k on the left turns the sum into a single exact
        // division, which stays inside the torus even when the two frame
        // monomials individually do not.
        let numerator = |v: &[i64]| -> Result<TorusElement> {
            let mut factors = Vec::new();
            for i in 1..=n {
                for _ in 0..v[i - 1] {
                    let y = self.variable(i);
                    let (lead, _) = y.leading().expect("cluster variables are nonzero");
                    factors.push((y.clone(), lead.clone()));
                }
            }
            let n_v = normalized_product(&ambient, &factors)?;
            let ek = ExponentVector::basis(n, k);
            let v_vec = ExponentVector::from_entries(v.to_vec());
            Ok(n_v.times_nu(self.lambda.eval(&ek, &v_vec)?))
        };
        let v_plus: Vec<i64> = (1..=n).map(|i| self.b.entry(i, k).max(0)).collect();
        let v_minus: Vec<i64> = (1..=n).map(|i| (-self.b.entry(i, k)).max(0)).collect();
        let exchange_sum = &numerator(&v_plus)? + &numerator(&v_minus)?;
        let y_new = left_divide(&ambient, self.variable(k), &exchange_sum)?;

        let b_new = self.b.mutated(k);
        let lambda_new = mutated_lambda(&self.lambda, &self.b, k)?;
        let mut cluster = self.cluster.clone();
        cluster[k - 1] = y_new;
        let seed = QuantumSeed { b: b_new, lambda: lambda_new, cluster };
        assert!(seed.compatibility_holds(), "mutation must preserve compatibility");
        assert!(
            seed.cluster_quasi_commutes()?,
            "mutated cluster must quasi-commute with the mutated form"
        );
        Ok(seed)
    }

    /// Left-to-right composition of [`Self::mutate`].
    pub fn mutate_sequence(&self, dirs: &[usize]) -> Result<QuantumSeed> {
        let mut seed = self.clone();
        for &k in dirs {
            seed = seed.mutate(k)?;
        }
        Ok(seed)
    }

    /// True when every coefficient of every cluster variable is a
    /// nonnegative integer times a ν-power (a diagnostic expected from
    /// general positivity phenomena, not one of the verified identities).
    pub fn cluster_coefficients_nonnegative(&self) -> bool {
        self.cluster.iter().all(TorusElement::coefficients_nonnegative)
    }
}

/// `Λ′ = EᵀΛE` for the mutation matrix `E`: the identity except in column
/// `k`, where `E_{ik} = [−b_{ik}]₊` for `i ≠ k` and `E_{kk} = −1`.
/// (The `ε = +1` convention; for compatible pairs the result is
/// ε-independent.)
fn mutated_lambda(lambda: &LambdaForm, b: &ExchangeMatrix, k: usize) -> Result<LambdaForm> {
    let n = lambda.rank();
    let mut e = vec![0i64; n * n];
    for i in 1..=n {
        for j in 1..=n {
            e[(i - 1) * n + (j - 1)] = if j == k {
                if i == k {
                    -1
                } else {
                    (-b.entry(i, k)).max(0)
                }
            } else {
                i64::from(i == j)
            };
        }
    }
    let l_flat: Vec<i64> =
        (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).map(|(i, j)| lambda.entry(i, j)).collect();
    let et = mat_transpose(n, &e);
    let result = mat_mul(n, &et, &mat_mul(n, &l_flat, &e));
    LambdaForm::new(n, result)
}

/// The one-step mutated variable `X′_i`: position `i` of `μ_i(initial)`.
///
/// Closed form in this family (with `e_0 = e_{n+1} = 0`):
/// `X′_i = X^{−e_i+e_{i−1}} + X^{−e_i+e_{i+1}}`.
pub fn one_step_mutated_variable(n: usize, i: usize) -> Result<TorusElement> {
    let seed = QuantumSeed::initial(n)?;
    Ok(seed.mutate(i)?.variable(i).clone())
}
