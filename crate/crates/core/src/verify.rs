//! Seeded, deterministic self-checks of the combinatorial, series and operator
//! identities, grouped into suites.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::convolve::{
    boolean_moments, chain_k_transform, free_cumulant_oracle_moments, free_moments, free_routes,
    jacobi_chain_decomposition, monotone_moments, orthogonal_iterated_moments, orthogonal_moments, sfree_moments,
};
use crate::error::Error;
use crate::measure::{approximant_k, jacobi_to_moments, JacobiParams, TailPolicy};
use crate::opmodel::{
    boolean_check, free_product_ball, freeness_check, graph_branch, graph_comb, graph_orthogonal, graph_star,
    monotone_check, orthogonal_graph_pair, orthogonality_check, random_graph, FreeProductModel, RootedGraph,
    SparseMatrix,
};
use crate::partitions::{
    bijection_f, bijection_g, enumerate_c, enumerate_d2, enumerate_dp2, enumerate_f, enumerate_interval, f_coefficient,
    f_inverse, g_inverse, inverse_boolean_cumulant, moment_function, orthogonal_moment_combinatorial,
    IntervalComposition, MAX_NC_N,
};
use crate::random::{random_pairs, random_square_jacobi, rng};
use crate::scalar::rat;
use crate::series::moments_to_f;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Partitions,
    Convolutions,
    OpModel,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "partitions" => Ok(Self::Partitions),
            "convolutions" => Ok(Self::Convolutions),
            "opmodel" => Ok(Self::OpModel),
            "all" => Ok(Self::All),
            other => Err(Error::Parse(format!("unknown suite {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub suite: Suite,
    /// Largest partition size for the combinatorial checks.
    pub n_max: usize,
    pub seed: u64,
    /// Random measure pairs per identity.
    pub pairs: usize,
    /// Moment order for the convolution identities.
    pub order: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { suite: Suite::All, n_max: 8, seed: 7, pairs: 20, order: 10 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub outcomes: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.outcomes.iter().find(|o| !o.passed)
    }

    fn check(&mut self, name: &str, f: impl FnOnce() -> Result<String, String>) {
        let (passed, detail) = match f() {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.outcomes.push(CheckOutcome { name: name.into(), passed, detail });
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            writeln!(f, "{} {}: {}", if o.passed { "PASS" } else { "FAIL" }, o.name, o.detail)?;
        }
        let failed = self.outcomes.iter().filter(|o| !o.passed).count();
        write!(f, "{} checks, {} failed", self.outcomes.len(), failed)
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

pub fn run(cfg: &VerifyConfig) -> VerifyReport {
    let mut report = VerifyReport::default();
    if matches!(cfg.suite, Suite::Partitions | Suite::All) {
        partitions(cfg, &mut report);
    }
    if matches!(cfg.suite, Suite::Convolutions | Suite::All) {
        convolutions(cfg, &mut report);
    }
    if matches!(cfg.suite, Suite::OpModel | Suite::All) {
        opmodel(cfg, &mut report);
    }
    report
}

fn random_moments(seed: u64, count: usize, order: usize) -> Vec<Vec<Rational>> {
    random_pairs(seed, count).into_iter().map(|(mu, _)| mu.moments(order).expect("atomic").into_vec()).collect()
}

fn partitions(cfg: &VerifyConfig, report: &mut VerifyReport) {
    let n_max = cfg.n_max.clamp(1, MAX_NC_N);

    report.check("interval partitions number 2^(n-1)", || {
        for n in 1..=n_max {
            let got = enumerate_interval(n).len();
            ensure(got == 1 << (n - 1), || format!("|I({n})| = {got}"))?;
        }
        Ok(format!("n ≤ {n_max}"))
    });

    report.check("depth-two partitions biject onto pairs (τ, σ ∈ I_odd(τ))", || {
        for n in 1..=n_max {
            let d2 = enumerate_d2(n);
            let c = enumerate_c(n);
            ensure(d2.len() == c.len(), || format!("n = {n}: |D2| = {}, |C| = {}", d2.len(), c.len()))?;
            let mut images = Vec::with_capacity(d2.len());
            for pi in &d2 {
                let (tau, sigma) = bijection_f(pi);
                let back = f_inverse(&tau, &sigma).map_err(err)?;
                ensure(&back == pi, || format!("n = {n}: round trip failed at {tau} / {sigma}"))?;
                images.push((tau, sigma));
            }
            images.sort_by_key(|(t, s)| (t.to_string(), s.to_string()));
            images.dedup();
            ensure(images.len() == c.len(), || format!("n = {n}: image has {} distinct pairs", images.len()))?;
        }
        Ok(format!("n ≤ {n_max}"))
    });

    report.check("decomposition pairs biject onto triples (m, σ, j)", || {
        for n in 1..=n_max {
            let dp2 = enumerate_dp2(n);
            let f = enumerate_f(n);
            ensure(dp2.len() == f.len(), || format!("n = {n}: |DP2| = {}, |F| = {}", dp2.len(), f.len()))?;
            let mut images = Vec::with_capacity(dp2.len());
            for pair in &dp2 {
                let t = bijection_g(pair);
                let back = g_inverse(&t).map_err(err)?;
                ensure(&back == pair, || format!("n = {n}: round trip failed at {t:?}"))?;
                images.push(format!("{t:?}"));
            }
            images.sort();
            images.dedup();
            ensure(images.len() == f.len(), || format!("n = {n}: image has {} distinct triples", images.len()))?;
        }
        Ok(format!("n ≤ {n_max}"))
    });

    report.check("inverse boolean cumulants of one to four blocks in closed form", || {
        let ms = random_moments(cfg.seed, cfg.pairs, 12);
        for m in &ms {
            let mu = |j: usize| m[j - 1].clone();
            for (n, p, k, l) in (1..=3).flat_map(|a| (1..=3).flat_map(move |b| (1..=2).map(move |c| (a, b, c, 1 + (a + b + c) % 2)))) {
                let c = |parts: &[usize]| IntervalComposition::new(parts.to_vec()).expect("positive parts");
                let one = mu(n);
                let two = mu(n) * mu(p) - mu(n + p);
                let three = mu(n) * mu(p) * mu(k) - mu(n + p) * mu(k) - mu(n) * mu(p + k) + mu(n + p + k);
                let four = mu(n) * mu(p) * mu(k) * mu(l) - mu(n + p) * mu(k) * mu(l) - mu(n) * mu(p + k) * mu(l)
                    - mu(n) * mu(p) * mu(k + l)
                    + mu(n + p) * mu(k + l)
                    + mu(n + p + k) * mu(l)
                    + mu(n) * mu(p + k + l)
                    - mu(n + p + k + l);
                for (parts, want) in [(vec![n], one), (vec![n, p], two), (vec![n, p, k], three), (vec![n, p, k, l], four)] {
                    let got = inverse_boolean_cumulant(m, &c(&parts)).map_err(err)?;
                    ensure(got == want, || format!("k*({parts:?}) = {got}, expected {want}"))?;
                }
            }
        }
        Ok(format!("{} random moment sequences", ms.len()))
    });

    report.check("moments are sums of inverse boolean cumulants over coarsenings", || {
        let ms = random_moments(cfg.seed ^ 1, cfg.pairs, n_max);
        for m in &ms {
            for n in 1..=n_max.min(8) {
                for pi in enumerate_interval(n) {
                    let mut sum = Rational::zero();
                    for sigma in pi.coarsenings() {
                        sum += inverse_boolean_cumulant(m, &sigma).map_err(err)?;
                    }
                    ensure(sum == moment_function(m, &pi).map_err(err)?, || format!("π = {pi}"))?;
                }
            }
        }
        Ok(format!("{} random moment sequences, n ≤ {}", ms.len(), n_max.min(8)))
    });

    report.check("reciprocal Cauchy transform coefficients are signed interval-partition sums", || {
        let ms = random_moments(cfg.seed ^ 2, cfg.pairs, n_max);
        for m in &ms {
            let f = moments_to_f(m);
            for n in 1..=n_max {
                let got = f_coefficient(m, n).map_err(err)?;
                ensure(got == f.coeff(n - 1), || format!("order {n}: {got} vs {}", f.coeff(n - 1)))?;
            }
        }
        Ok(format!("{} random moment sequences, n ≤ {n_max}", ms.len()))
    });

    report.check("orthogonal convolution moments as sums over odd refinements", || {
        for (mu, nu) in random_pairs(cfg.seed ^ 3, cfg.pairs) {
            let a = mu.moments(n_max).map_err(err)?.into_vec();
            let b = nu.moments(n_max).map_err(err)?.into_vec();
            let series = orthogonal_moments(&a, &b);
            for n in 1..=n_max {
                let comb = orthogonal_moment_combinatorial(&a, &b, &IntervalComposition::single(n)).map_err(err)?;
                ensure(comb == series[n - 1], || format!("order {n}: {comb} vs {}", series[n - 1]))?;
            }
        }
        Ok(format!("{} random pairs, n ≤ {n_max}", cfg.pairs))
    });
}

fn convolutions(cfg: &VerifyConfig, report: &mut VerifyReport) {
    let n = cfg.order;
    let pairs: Vec<(Vec<Rational>, Vec<Rational>)> = random_pairs(cfg.seed, cfg.pairs)
        .into_iter()
        .map(|(mu, nu)| (mu.moments(n).expect("atomic").into_vec(), nu.moments(n).expect("atomic").into_vec()))
        .collect();
    let done = || format!("{} random pairs, order {n}", pairs.len());

    report.check("orthogonal convolution: series composition equals partition sum", || {
        for (a, b) in &pairs {
            let series = orthogonal_moments(a, b);
            for k in 1..=n {
                let comb = orthogonal_moment_combinatorial(a, b, &IntervalComposition::single(k)).map_err(err)?;
                ensure(comb == series[k - 1], || format!("order {k}"))?;
            }
        }
        Ok(done())
    });

    report.check("free convolution: monotone route, boolean route and free cumulants agree", || {
        for (a, b) in &pairs {
            let (ra, rb) = free_routes(a, b);
            ensure(ra == rb, || "routes differ".into())?;
            let oracle = free_cumulant_oracle_moments(a, b).map_err(err)?;
            ensure(ra == oracle, || "routes differ from the free-cumulant oracle".into())?;
        }
        Ok(done())
    });

    report.check("monotone convolution = (orthogonal convolution) ⊎ second measure", || {
        for (a, b) in &pairs {
            ensure(monotone_moments(a, b) == boolean_moments(&orthogonal_moments(a, b), b), || "mismatch".into())?;
        }
        Ok(done())
    });

    report.check("free convolution = boolean sum of the two s-free convolutions", || {
        for (a, b) in &pairs {
            let want = free_moments(a, b).map_err(err)?;
            ensure(boolean_moments(&sfree_moments(a, b), &sfree_moments(b, a)) == want, || "mismatch".into())?;
        }
        Ok(done())
    });

    report.check("free convolution = first measure ▷ reversed s-free convolution", || {
        for (a, b) in &pairs {
            let want = free_moments(a, b).map_err(err)?;
            ensure(monotone_moments(a, &sfree_moments(b, a)) == want, || "mismatch".into())?;
            ensure(monotone_moments(b, &sfree_moments(a, b)) == want, || "mismatch with roles swapped".into())?;
        }
        Ok(done())
    });

    report.check("alternating orthogonal convolutions stabilize: m-th and (m+1)-th agree to order 2m", || {
        for (a, b) in &pairs {
            for m in 1..=n / 2 {
                let x = orthogonal_iterated_moments(a, b, m).map_err(err)?;
                let y = orthogonal_iterated_moments(a, b, m + 1).map_err(err)?;
                ensure(x[..2 * m] == y[..2 * m], || format!("m = {m}"))?;
            }
            ensure(orthogonal_iterated_moments(a, b, n).map_err(err)? == sfree_moments(a, b), || "limit".into())?;
        }
        Ok(done())
    });

    report.check("orthogonal chain of a semicircle reproduces its K-approximants", || {
        let j = JacobiParams::new(vec![], vec![], TailPolicy::Wigner { a: rat(0, 1), b: rat(1, 1) }).map_err(err)?;
        for m in 1..=5 {
            let chain = jacobi_chain_decomposition(&j, m).map_err(err)?;
            let k = chain_k_transform(&chain).map_err(err)?;
            ensure(k.same_as(&approximant_k(&j, m).map_err(err)?), || format!("m = {m}"))?;
        }
        Ok("m ≤ 5".into())
    });
}

/// Exact moment equality of a model operator against a reference, up to `order`.
fn moments_match(got: &[Rational], want: &[Rational], what: &str) -> Result<(), String> {
    match got.iter().zip(want).position(|(x, y)| x != y) {
        Some(i) => Err(format!("{what}: order {} gives {} instead of {}", i + 1, got[i], want[i])),
        None => Ok(()),
    }
}

/// Factor dimension and word caps for the operator-model checks.
pub const OPMODEL_D: usize = 8;
pub const OPMODEL_CAP: usize = 10;

fn opmodel(cfg: &VerifyConfig, report: &mut VerifyReport) {
    let mu = JacobiParams::new(vec![], vec![], TailPolicy::Wigner { a: rat(0, 1), b: rat(1, 1) }).expect("semicircle");
    let nu = random_square_jacobi(&mut rng(cfg.seed));
    let model = match FreeProductModel::new(&mu, &nu, OPMODEL_D, OPMODEL_CAP, OPMODEL_CAP) {
        Ok(m) => m,
        Err(e) => {
            report.check("operator model assembly", || Err(err(e)));
            return;
        }
    };
    let order = model.exact_order(0);
    let a = jacobi_to_moments(&mu, order).expect("moments").into_vec();
    let b = jacobi_to_moments(&nu, order).expect("moments").into_vec();
    let xi = model.vacuum();

    report.check("free product representation: vacuum moments of λ(a1) + λ(a2) are the free convolution", || {
        let got = model.sum().moments(&xi, order);
        moments_match(&got, &free_moments(&a, &b).map_err(err)?, "X1 + X2")?;
        Ok(format!("certified orders ≤ {order}, {} basis words", model.basis().len()))
    });

    report.check("replicas sum to λ(a_j) and live on disjoint levels", || {
        for j in [1, 2] {
            let mut acc = SparseMatrix::zeros(model.basis().len());
            for lvl in 1..=model.max_level() {
                acc = acc.add(&model.replica(j, lvl).map_err(err)?.matrix);
            }
            ensure(acc == model.lambda(j).matrix, || format!("Σ X_{j}(n) ≠ λ(a_{j})"))?;
            for p in 1..=4 {
                for q in (1..=4).filter(|&q| q != p) {
                    let prod = model.replica(j, p).map_err(err)?.matrix.mul(&model.replica(j, q).map_err(err)?.matrix);
                    ensure(prod.is_zero(), || format!("X_{j}({p}) X_{j}({q}) ≠ 0"))?;
                }
            }
        }
        Ok(format!("levels 1..={}", model.max_level()))
    });

    report.check("first replica has the factor distribution in the vacuum", || {
        moments_match(&model.replica(1, 1).map_err(err)?.moments(&xi, order), &a, "X1(1)")?;
        moments_match(&model.replica(2, 1).map_err(err)?.moments(&xi, order), &b, "X2(1)")?;
        Ok(format!("certified orders ≤ {order}"))
    });

    report.check("free branches: B1 + B2 = X1 + X2 and B_j(k) = X_j(k) + B_j̄(k+1)", || {
        let sum = model.branch(1, 1).map_err(err)?.matrix.add(&model.branch(2, 1).map_err(err)?.matrix);
        ensure(sum == model.sum().matrix, || "B1 + B2 ≠ X1 + X2".into())?;
        for j in [1, 2] {
            for k in 1..=4 {
                let lhs = model.branch(j, k).map_err(err)?.matrix;
                let rhs = model.replica(j, k).map_err(err)?.matrix.add(&model.branch(3 - j, k + 1).map_err(err)?.matrix);
                ensure(lhs == rhs, || format!("recursion fails at j = {j}, k = {k}"))?;
            }
        }
        Ok("k ≤ 4".into())
    });

    report.check("free branches: B_j(k) in a level-(k-1) state has the s-free distribution", || {
        let mut orders = Vec::new();
        for k in 1..=3 {
            for (j, first, x, y) in [(1u8, 2u8, &a, &b), (2, 1, &b, &a)] {
                let (eta, s) = model.level_state(first, k - 1).map_err(err)?;
                let n = model.exact_order(s);
                let got = model.branch(j, k).map_err(err)?.moments(&eta, n);
                moments_match(&got, &sfree_moments(&x[..n], &y[..n]), &format!("B_{j}({k})"))?;
                orders.push(format!("B{j}({k}): {n}"));
            }
        }
        Ok(format!("certified orders {}", orders.join(", ")))
    });

    report.check("replica X_j(k) and branch B_j̄(k+1) are orthogonal", || {
        let n_max = 3;
        let mut total = 0;
        let mut g = rng(cfg.seed ^ 4);
        for j in [1u8, 2] {
            for k in 1..=3 {
                let r = model.replica_branch_orthogonality::<rand_chacha::ChaCha8Rng>(j, k, n_max, None).map_err(err)?;
                ensure(r.is_clean(), || format!("j = {j}, k = {k}: {}", r.violations[0]))?;
                total += r.checks;
            }
            for k in 1..=2 {
                for _ in 0..3 {
                    let r = model.replica_branch_orthogonality(j, k, n_max, Some(&mut g)).map_err(err)?;
                    ensure(r.is_clean(), || format!("j = {j}, k = {k}, random state: {}", r.violations[0]))?;
                    total += r.checks;
                }
            }
        }
        Ok(format!("{total} identities, monomial degree ≤ {n_max}, words of length ≤ {}", 5 * n_max))
    });

    report.check("negative control: a free pair violates orthogonality", || {
        let (eta, _) = model.level_state(1, 1).map_err(err)?;
        let r = orthogonality_check(&model.lambda(1).matrix, &model.lambda(2).matrix, &xi, &eta, 2);
        match r.violations.first() {
            Some(v) => Ok(format!("violated by {v}")),
            None => Err("no violation found".into()),
        }
    });

    report.check("free branches B1, B2 are boolean independent in the vacuum", || {
        let r = boolean_check(&model.branch(1, 1).map_err(err)?.matrix, &model.branch(2, 1).map_err(err)?.matrix, &xi, 6);
        ensure(r.is_clean(), || r.violations[0].clone())?;
        Ok(format!("{} words of length ≤ 6", r.checks))
    });

    report.check("first replica X_j(1) and Z_j = X1 + X2 - X_j(1) are monotone independent", || {
        let mut checks = 0;
        for j in [1, 2] {
            let x = model.replica(j, 1).map_err(err)?;
            let z = model.monotone_complement(j).map_err(err)?;
            let r = monotone_check(&x.matrix, &z.matrix, &xi, 6);
            ensure(r.is_clean(), || format!("j = {j}: {}", r.violations[0]))?;
            checks += r.checks;
        }
        Ok(format!("{checks} words of length ≤ 6"))
    });

    report.check("λ(a1), λ(a2) are free in the vacuum", || {
        let r = freeness_check(&model.lambda(1).matrix, &model.lambda(2).matrix, &xi, 4, 3);
        ensure(r.is_clean(), || r.violations[0].clone())?;
        Ok(format!("{} centered alternating products, n ≤ 4", r.checks))
    });

    report.check("irrational off-diagonals: floating model matches the free convolution within 1e-9", || {
        let mu = JacobiParams::new(vec![], vec![], TailPolicy::Wigner { a: 0.0f64, b: 2.0 }).map_err(err)?;
        let nu = JacobiParams::new(vec![0.5f64, -1.0], vec![3.0f64, 0.5], TailPolicy::Wigner { a: 0.0, b: 1.0 }).map_err(err)?;
        let m = FreeProductModel::new(&mu, &nu, OPMODEL_D, OPMODEL_CAP, OPMODEL_CAP).map_err(err)?;
        let n = m.exact_order(0);
        let got: Vec<f64> = m.sum().moments(&m.vacuum(), n);
        let want = free_moments(&jacobi_to_moments(&mu, n).map_err(err)?.into_vec(), &jacobi_to_moments(&nu, n).map_err(err)?.into_vec())
            .map_err(err)?;
        for (k, (x, y)) in got.iter().zip(&want).enumerate() {
            ensure((x - y).abs() <= 1e-9 * 1f64.max(y.abs()), || format!("order {}: {x} vs {y}", k + 1))?;
        }
        Ok(format!("orders ≤ {n}"))
    });

    graphs(cfg, report);
}

fn graphs(cfg: &VerifyConfig, report: &mut VerifyReport) {
    let mut g = rng(cfg.seed ^ 5);
    let pairs: Vec<(RootedGraph, RootedGraph)> = (0..5).map(|_| (random_graph(&mut g, 4), random_graph(&mut g, 4))).collect();
    let n = 8;
    let root = |gr: &RootedGraph, k: usize| gr.root_spectral_moments(k).into_vec();

    type Product = fn(&RootedGraph, &RootedGraph) -> RootedGraph;
    type Conv = fn(&[Rational], &[Rational]) -> Vec<Rational>;
    let dictionary: [(&str, Product, Conv); 3] = [
        ("orthogonal graph product realizes the orthogonal convolution", graph_orthogonal, orthogonal_moments),
        ("comb graph product realizes the monotone convolution", graph_comb, monotone_moments),
        ("star graph product realizes the boolean convolution", graph_star, boolean_moments),
    ];
    for (name, product, conv) in dictionary {
        report.check(name, || {
            for (g1, g2) in &pairs {
                moments_match(&root(&product(g1, g2), n), &conv(&root(g1, n), &root(g2, n)), "root moments")?;
            }
            Ok(format!("{} random graph pairs, orders ≤ {n}", pairs.len()))
        });
    }

    report.check("free product ball realizes the free convolution", || {
        let radius = 3;
        let k = 2 * radius + 1;
        for (g1, g2) in &pairs {
            let want = free_moments(&root(g1, k), &root(g2, k)).map_err(err)?;
            moments_match(&root(&free_product_ball(g1, g2, radius), k), &want, "root moments")?;
        }
        let p2 = RootedGraph::path(2);
        let arcsine = root(&free_product_ball(&p2, &p2, 6), 6);
        moments_match(&arcsine, &[0, 2, 0, 6, 0, 20].map(|x| rat(x, 1)), "two-edge free product")?;
        Ok(format!("{} random graph pairs at radius {radius}, orders ≤ {k}; arcsine at radius 6", pairs.len()))
    });

    report.check("branch of the free product realizes the s-free convolution", || {
        let radius = 3;
        let k = 2 * radius + 1;
        for (g1, g2) in &pairs {
            let want = sfree_moments(&root(g1, k), &root(g2, k));
            moments_match(&root(&graph_branch(g1, g2, radius), k), &want, "root moments")?;
        }
        Ok(format!("{} random graph pairs at radius {radius}, orders ≤ {k}", pairs.len()))
    });

    report.check("A1 ⊗ P_e2 and P_e1⊥ ⊗ A2 are orthogonal", || {
        let mut checks = 0;
        for (g1, g2) in &pairs {
            let (x, y, xi, eta) = orthogonal_graph_pair(g1, g2).map_err(err)?;
            let r = orthogonality_check(&x, &y, &xi, &eta, 2);
            ensure(r.is_clean(), || r.violations[0].clone())?;
            checks += r.checks;
        }
        Ok(format!("{checks} identities over {} random graph pairs", pairs.len()))
    });

}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_parse() {
        assert_eq!("opmodel".parse::<Suite>().unwrap(), Suite::OpModel);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn partitions_suite_passes() {
        let r = run(&VerifyConfig { suite: Suite::Partitions, n_max: 6, ..Default::default() });
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn convolutions_suite_is_deterministic() {
        let cfg = VerifyConfig { suite: Suite::Convolutions, pairs: 5, ..Default::default() };
        let (a, b) = (run(&cfg), run(&cfg));
        assert!(a.passed(), "{a}");
        assert_eq!(a, b);
    }
}
