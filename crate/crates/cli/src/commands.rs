//! The report-producing commands.

use coalgebra::cellular::{
    codegeneracy_commutation, cogeneration_eval, cosimplicial_identities, grouplike_certificate, hurewicz_chain_map,
    injectivity_certificate, q_level, random_instance, sample_nested, LatticeKey, Polynomial,
};
use coalgebra::diagonal::cohomology::steenrod_square_in;
use coalgebra::diagonal::table::{
    check_chain_map, check_chain_map_on, check_coassociativity, check_counit, check_equivariance, check_naturality,
    check_vanishing,
};
use coalgebra::diagonal::{bockstein, cohomology_f2, grouplike_signs_top, DiagonalTable};
use coalgebra::doldkan::{check_gamma_pair, dold_kan_roundtrip, gamma_pair, integers_in_degree, RoundtripReport};
use coalgebra::exactalg::matrix::rank_over_field;
use coalgebra::exactalg::{d_squared_vanishes, homology_groups, Matrix};
use coalgebra::fixtures;
use coalgebra::simplicial::{normalized_chains, std_simplex, Simplex, SimplicialSet, SimplicialSetMap};
use coalgebra::{Chain, Integer};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::input::{self, Subject};
use crate::report::{sub, sup, Report};
use crate::CliError;

/// Shared numeric flags.
#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub max_dim: usize,
    pub tensor_trunc: usize,
    pub level: usize,
    pub seed: u64,
}

/// Samples per level for the sampled checks.
const SAMPLES: usize = 20;
const GAMMA_SAMPLES: usize = 50;
/// Coefficient bound of random injectivity instances.
const COEFFICIENT_BOUND: i64 = 9;
/// Largest `k` of the top-sign table.
const TOP_SIGN_RANGE: usize = 8;

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "holds"
    } else {
        "fails"
    }
}

pub fn homology(subject: &Subject, opts: Options) -> Result<Report, CliError> {
    let x = &subject.set;
    let mut r = Report::new("homology", Some(subject.name.clone()));
    r.parameter("max_dim", opts.max_dim);
    let f: Vec<String> = x.f_vector().iter().map(usize::to_string).collect();
    r.info("f-vector", format!("({})", f.join(", ")));
    let c = normalized_chains(x);
    let top = opts.max_dim.min(x.dim());
    r.check(
        "∂² = 0",
        pass_fail(d_squared_vanishes(&c, top + 1)),
        d_squared_vanishes(&c, top + 1),
    );
    for n in 0..=top {
        r.info(format!("H{}", sub(n)), homology_groups(&c, n)?.to_string());
    }
    Ok(r)
}

fn f2_rank(rows: Vec<Vec<coalgebra::F2>>) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        0
    } else {
        rank_over_field(&Matrix::from_rows(rows))
    }
}

/// `Sq^i: H^q -> H^{q+i}` for every `q + i ≤ dim`, with its rank and the
/// applicable oracle: identity for `i = 0`, the Bockstein for `i = 1`, zero for `i > q`.
pub fn steenrod(subject: &Subject) -> Result<Report, CliError> {
    let x = &subject.set;
    let mut r = Report::new("steenrod", Some(subject.name.clone()));
    let groups: Vec<_> = (0..=x.dim()).map(|q| cohomology_f2(x, q)).collect();
    for (q, hq) in groups.iter().enumerate() {
        for i in 0..=x.dim() - q {
            let target = &groups[q + i];
            let mut images = Vec::new();
            let mut ok = true;
            for u in hq.basis_classes() {
                let sq = steenrod_square_in(i as i64, &u.representative, x, target)?;
                ok &= match i {
                    0 => sq.coordinates == u.coordinates,
                    1 => target.class_of(&bockstein(&u.representative, x)?, x)? == sq,
                    _ if i > q => sq.is_zero(),
                    _ => true,
                };
                images.push(sq.coordinates);
            }
            let label = format!("Sq{}: H{} → H{}", sup(i), sup(q), sup(q + i));
            let value = format!("rank {}", f2_rank(images));
            if i <= 1 || i > q {
                r.check(label, value, ok);
            } else {
                r.info(label, value);
            }
        }
    }
    Ok(r)
}

fn vertices_of(delta: &SimplicialSet, face: coalgebra::simplicial::SimplexId) -> Vec<usize> {
    delta
        .label(face)
        .trim_matches(|c| c == '[' || c == ']')
        .split(',')
        .map(|v| v.parse().expect("numeric label"))
        .collect()
}

/// Naturality along the characteristic map of every nondegenerate simplex.
fn characteristic_naturality(x: &SimplicialSet, max_dim: usize) -> Result<usize, CliError> {
    let mut count = 0;
    for n in 1..=x.dim().min(max_dim) {
        for sigma in x.nondegenerate(n) {
            let delta = std_simplex(n);
            let s = Simplex::nondegenerate(sigma);
            let images = (0..=n)
                .map(|k| {
                    delta
                        .nondegenerate(k)
                        .map(|f| x.act(&s, &vertices_of(&delta, f)))
                        .collect()
                })
                .collect();
            let g = SimplicialSetMap::new(&delta, x, images)?;
            check_naturality(&g, &delta, x, n)?;
            count += 1;
        }
    }
    Ok(count)
}

/// Runs a check, turning an invariant failure into a failed row.
fn record(r: &mut Report, label: String, result: coalgebra::Result<String>) {
    match result {
        Ok(value) => r.check(label, value, true),
        Err(e) => r.check(label, e.to_string(), false),
    }
}

pub fn verify_diagonal(subject: Option<&Subject>, opts: Options) -> Result<Report, CliError> {
    let mut r = Report::new("verify-diagonal", subject.map(|s| s.name.clone()));
    r.parameter("max_dim", opts.max_dim);
    let table = DiagonalTable::new();
    let k = opts.max_dim;
    record(
        &mut r,
        format!("chain map on Δᵏ, k ≤ {k}"),
        check_chain_map(&table, k, 2 * k).map(|n| format!("{n} cases")),
    );
    record(
        &mut r,
        format!("S₂-equivariance on Δᵏ, k ≤ {k}"),
        check_equivariance(&table, k, 2 * k).map(|n| format!("{n} cases")),
    );
    let spaces: Vec<(String, SimplicialSet)> = match subject {
        Some(s) => vec![(s.name.clone(), s.set.clone())],
        None => fixtures::NAMES
            .iter()
            .map(|n| (n.to_string(), fixtures::fixture(n).expect("bundled")))
            .collect(),
    };
    for (name, x) in &spaces {
        let top = x.dim().min(k);
        record(
            &mut r,
            format!("{name}: chain map"),
            check_chain_map_on(x, top + 1).map(|n| format!("{n} cases")),
        );
        record(
            &mut r,
            format!("{name}: vanishing above dim"),
            check_vanishing(x, 2).map(|_| "holds".into()),
        );
        record(
            &mut r,
            format!("{name}: counit"),
            check_counit(x).map(|_| "holds".into()),
        );
        record(
            &mut r,
            format!("{name}: e₀-coassociativity"),
            check_coassociativity(x, k).map(|_| "holds".into()),
        );
        match characteristic_naturality(x, k) {
            Ok(n) => r.check(format!("{name}: naturality"), format!("{n} characteristic maps"), true),
            Err(CliError::Core(e)) => r.check(format!("{name}: naturality"), e.to_string(), false),
            Err(e) => return Err(e),
        }
    }
    Ok(r)
}

pub fn grouplike(subject: Option<&Subject>, opts: Options) -> Result<Report, CliError> {
    let mut r = Report::new("grouplike", subject.map(|s| s.name.clone()));
    r.parameter("max_dim", opts.max_dim);
    r.parameter("tensor_trunc", opts.tensor_trunc);
    for s in grouplike_signs_top(TOP_SIGN_RANGE) {
        let observed = s.observed.map_or("not ±ι⊗ι".to_string(), |c| format!("{c:+}"));
        r.check(
            format!("f(e{k} ⊗ ι{k})", k = sub(s.k)),
            format!("sign {observed}, expected {:+}", s.expected),
            s.holds(),
        );
    }
    if let Some(subject) = subject {
        let x = &subject.set;
        for m in 0..=x.dim().min(opts.max_dim) {
            let mut count = 0;
            let mut up_to_sign = true;
            let mut signed = true;
            for sigma in x.nondegenerate(m) {
                let report = grouplike_certificate(&Chain::basis(sigma), opts.tensor_trunc, x)?;
                up_to_sign &= report.grouplike_up_to_sign();
                signed &= report.passed();
                count += 1;
            }
            r.check(
                format!("F_k(σ) = ±σ^⊗k, dim σ = {m}, k ≤ {}", opts.tensor_trunc),
                format!("{count} simplices, {}", pass_fail(up_to_sign)),
                up_to_sign,
            );
            r.check(
                format!("F_k(σ) = ε^(k−1)·σ^⊗k, dim σ = {m}, k ≤ {}", opts.tensor_trunc),
                pass_fail(signed).to_string(),
                signed,
            );
        }
    }
    Ok(r)
}

fn format_vector(c: &Chain<LatticeKey>, rank: usize) -> String {
    let entries: Vec<String> = (0..rank).map(|i| c.coefficient(&LatticeKey(i)).to_string()).collect();
    format!("({})", entries.join(", "))
}

fn format_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (n, (e, c)) in p.terms().enumerate() {
        let monomial: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d > 0)
            .map(|(i, &d)| if d == 1 { format!("X{i}") } else { format!("X{i}^{d}") })
            .collect();
        let negative = *c < Integer::from(0);
        let magnitude = if negative { -c.clone() } else { c.clone() };
        out += match (n, negative) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        };
        let one = magnitude == Integer::from(1);
        match (monomial.is_empty(), one) {
            (true, _) => out += &magnitude.to_string(),
            (false, true) => out += &monomial.join("*"),
            (false, false) => out += &format!("{magnitude}*{}", monomial.join("*")),
        }
    }
    out
}

pub fn injectivity_cert(rank: usize, t: usize, opts: Options) -> Result<Report, CliError> {
    let mut r = Report::new("injectivity-cert", None);
    r.parameter("rank", rank);
    r.parameter("t", t);
    r.parameter("seed", opts.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let cs = random_instance(rank, t, COEFFICIENT_BOUND, &mut rng).map_err(|e| CliError::Usage(e.to_string()))?;
    let report = injectivity_certificate(&cs, t).map_err(|e| CliError::Usage(e.to_string()))?;
    for (i, c) in cs.iter().enumerate() {
        r.info(format!("c{}", sub(i + 1)), format_vector(c, rank));
    }
    r.info(
        "matrix",
        format!("{t} × {} over {} indeterminates", report.columns, report.variables),
    );
    r.check("injectivity", format!("rank {}/{t}", report.rank), report.rank == t);
    if let (Some(det), Some(vdm)) = (&report.determinant, &report.vandermonde) {
        r.check("determinant = Π(g(cᵢ) − g(cⱼ))", format_polynomial(det), det == vdm);
    }
    Ok(r)
}

fn roundtrip_rows(r: &mut Report, label: &str, report: &RoundtripReport) {
    for d in &report.degrees {
        r.check(
            format!("{label}: degree {}", d.degree),
            format!(
                "rank {}, N rank {}, H = {}",
                d.rank, d.normalized_rank, d.moore_homology
            ),
            d.passed(),
        );
    }
}

pub fn doldkan_roundtrip(subject: Option<&Subject>, opts: Options) -> Result<Report, CliError> {
    let mut r = Report::new("doldkan-roundtrip", subject.map(|s| s.name.clone()));
    r.parameter("max_dim", opts.max_dim);
    let Some(subject) = subject else {
        for k in 0..=3 {
            let report = dold_kan_roundtrip(integers_in_degree(k), opts.max_dim)?;
            roundtrip_rows(&mut r, &format!("Z[{k}]"), &report);
        }
        return Ok(r);
    };
    r.parameter("level", opts.level);
    r.parameter("seed", opts.seed);
    let report = dold_kan_roundtrip(normalized_chains(&subject.set), opts.max_dim)?;
    roundtrip_rows(&mut r, "NC", &report);
    if subject.set.is_pointed() {
        let x = input::reduced(subject)?;
        let pair = gamma_pair(&x, opts.level)?;
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let report = check_gamma_pair(&pair, GAMMA_SAMPLES, &mut rng)?;
        for &(n, samples, failures) in &report.levels {
            r.check(
                format!("γ∘ι = id, level {n}"),
                format!("{} of {samples} samples", samples - failures),
                failures == 0,
            );
        }
        r.check(
            "ι∘γ = id on generators",
            pass_fail(report.inverse_on_generators),
            report.inverse_on_generators,
        );
        r.check("γ, ι simplicial", pass_fail(report.simplicial), report.simplicial);
    } else {
        r.info("γ∘ι = id", "skipped: no basepoint");
    }
    Ok(r)
}

pub fn resolution_check(subject: &Subject, opts: Options) -> Result<Report, CliError> {
    let mut r = Report::new("resolution-check", Some(subject.name.clone()));
    r.parameter("level", opts.level);
    r.parameter("max_dim", opts.max_dim);
    r.parameter("seed", opts.seed);
    let x = input::reduced(subject)?;
    let dims: Vec<usize> = (1..=opts.max_dim.min(3))
        .filter(|&d| x.simplices(d).iter().any(|s| Some(s.base()) != x.basepoint()))
        .collect();
    if dims.is_empty() {
        return Err(CliError::Usage(format!(
            "{} has no simplices off the basepoint",
            subject.name
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for n in 0..=opts.level {
        let q = q_level(&x, n, opts.level).map_err(|e| CliError::Usage(e.to_string()))?;
        let (mut held, mut total) = (0, 0);
        for _ in 0..SAMPLES {
            let sample = q.sample(dims[rng.gen_range(0..dims.len())], &mut rng);
            for c in cosimplicial_identities(&x, n, &sample, opts.level)? {
                held += usize::from(c.holds);
                total += 1;
            }
        }
        r.check(
            format!("cosimplicial identities, level {n}"),
            format!("{held}/{total}"),
            held == total,
        );
    }
    let mut commuting = 0;
    for _ in 0..SAMPLES {
        let sample = sample_nested(&x, 3, dims[rng.gen_range(0..dims.len())], &mut rng);
        commuting += usize::from(codegeneracy_commutation(&sample, &x)?);
    }
    r.check(
        "codegeneracy commutation, depth 3",
        format!("{commuting}/{SAMPLES}"),
        commuting == SAMPLES,
    );
    let h = hurewicz_chain_map(&x)?;
    let chain_map = h.check_chain_map(opts.max_dim.min(3));
    r.check(
        "Hurewicz chain map",
        chain_map
            .as_ref()
            .map_or_else(|e| e.to_string(), |n| format!("{n} cases")),
        chain_map.is_ok(),
    );
    let mut inverse = true;
    for d in &dims {
        for s in x.simplices(*d).into_iter().filter(|s| Some(s.base()) != x.basepoint()) {
            let c = Chain::basis(s);
            inverse &= cogeneration_eval(&h.apply(&c))? == c;
        }
    }
    r.check("ε∘h = id", pass_fail(inverse), inverse);
    Ok(r)
}
