//! Self-verification suites: every generating function and bijection is
//! checked against exhaustive enumeration. Shared by the CLI and the
//! acceptance test target.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use astro_float::BigFloat;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::asymptotics::{asymptotic_count, float_to_f64, growth_rate, leading_term, rational_to_float};
use crate::bijection::{convert_123_to_132, phi, phi_inverse, phi_via_minima, psi, psi_inverse};
use crate::combinat::catalan;
use crate::error::Error;
use crate::oracle::{census_many_with, path_census, strip_path_sum, Census, OracleConfig};
use crate::orthopoly::{
    chebyshev_u, gf_avoiders_12k, gf_avoiders_23k1, gf_avoiders_k1k, gf_exactly_r_12k, gf_exactly_r_23k1,
    gf_exactly_r_k1k, gf_one_23k1, q_poly, strip_gf, PolySystem,
};
use crate::path::{enumerate_paths, weight_w1, weight_w2, HeightWeights, LatticePath, PathKind, WeightSpec};
use crate::perm::{avoids, count_occurrences, Pattern, Permutation};
use crate::poly::Poly;
use crate::series::{cf_motzkin, cf_peaked_dyck, gf_theorem1, gf_theorem8, marked_weights, TruncatedSeries};

/// Largest permutation size used by the default suites.
pub const DEFAULT_MAX_N: usize = 9;
/// Pattern lengths covered by the statistic and census checks.
pub const PATTERN_LENGTHS: std::ops::RangeInclusive<usize> = 2..=5;
/// Largest `r` for the 12…k closed form.
pub const MAX_R_12K: usize = 6;
/// Order to which the three avoider series and the y-strata are compared.
pub const SERIES_ORDER: usize = 12;
/// Strip height bound, path length and number of random weight draws.
pub const STRIP_MAX_K: usize = 4;
pub const PATH_MAX_LENGTH: usize = 12;
pub const WEIGHT_DRAWS: usize = 10;
pub const WEIGHT_SEED: u64 = 0x5eed_2024;
/// Draws for which the strip series is also checked against brute-force
/// path enumeration (all draws are checked against the transfer DP).
pub const ENUMERATED_DRAWS: usize = 2;
/// Relative error bound at `n = 40` for the trigonometric estimate.
pub const REL_ERR_AT_40: f64 = 0.15;
/// Agreement of the minimal root of `q_k` with `1/(4cos²(π/(k+1)))`.
pub const ROOT_TOLERANCE: f64 = 1e-20;
/// Agreement of the two leading-term routes for avoiders.
pub const LEADING_TERM_TOLERANCE: f64 = 1e-9;
/// Wall-clock budget for a whole suite run at the default size.
pub const DESK_BUDGET: Duration = Duration::from_secs(600);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Bijections,
    Series,
    Appendix,
    Asymptotics,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s {
            "bijections" => Suite::Bijections,
            "series" => Suite::Series,
            "appendix" => Suite::Appendix,
            "asymptotics" => Suite::Asymptotics,
            "all" => Suite::All,
            _ => return Err(Error::Parse(format!("unknown suite {s:?}"))),
        })
    }
}

/// Outcome of one named property.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub failure: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {}", self.name),
            Some(why) => write!(f, "FAIL {}: {}", self.name, why),
        }
    }
}

type Outcome = Result<(), String>;

fn run(name: impl Into<String>, f: impl FnOnce() -> Outcome) -> Check {
    Check {
        name: name.into(),
        failure: f().err(),
    }
}

fn lib<T>(r: crate::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pat(s: &str) -> Pattern {
    s.parse().expect("literal pattern")
}

fn perm(s: &str) -> Permutation {
    s.parse().expect("literal permutation")
}

fn dyck(s: &str) -> LatticePath {
    s.parse().expect("literal path")
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

const FIG_132: &str = "74352681";
const FIG_123: &str = "58327641";
const FIG_PATH: &str = "UUDUUUDUDDUDDDUD";

fn avoiders(n: usize, sigma: &Pattern) -> Vec<Permutation> {
    Permutation::all(n).filter(|p| avoids(p, sigma)).collect()
}

fn oracle_config(max_n: usize) -> OracleConfig {
    OracleConfig {
        max_n,
        ..OracleConfig::default()
    }
}

// ------------------------------------------------------- bijections ---

/// Criterion: `phi` and `psi` are bijections onto closed Dyck paths, both
/// definitions of `phi` agree, round trips are identities, and the worked
/// example maps as drawn.
pub fn bijection_checks(max_n: usize) -> Vec<Check> {
    let mut out = vec![run("worked example: 74352681 -> UUDUUUDUDDUDDDUD <- 58327641", || {
        let p = dyck(FIG_PATH);
        let a = lib(phi(&perm(FIG_132)))?;
        let b = lib(phi_via_minima(&perm(FIG_132)))?;
        let c = lib(psi(&perm(FIG_123)))?;
        ensure(a == p && b == p && c == p, || format!("phi={a}, phi_via_minima={b}, psi={c}"))?;
        ensure(lib(phi_inverse(&p))? == perm(FIG_132), || "phi_inverse".into())?;
        ensure(lib(psi_inverse(&p))? == perm(FIG_123), || "psi_inverse".into())?;
        ensure(lib(convert_123_to_132(&perm(FIG_123)))? == perm(FIG_132), || "convert_123_to_132".into())
    })];
    for (sigma, name) in [("132", "phi"), ("123", "psi")] {
        out.push(run(format!("{name} is a bijection from {sigma}-avoiders onto closed Dyck paths, n <= {max_n}"), || {
            let sigma = pat(sigma);
            for n in 0..=max_n {
                let all_paths: BTreeSet<String> = lib(enumerate_paths(2 * n, PathKind::Dyck, None, 0, 0))?
                    .map(|p| p.to_string())
                    .collect();
                ensure(BigUint::from(all_paths.len()) == catalan(n as u64), || format!("path count at n={n}"))?;
                let mut images = BTreeSet::new();
                for pi in avoiders(n, &sigma) {
                    let p = lib(if name == "phi" { phi(&pi) } else { psi(&pi) })?;
                    ensure(p.is_closed_dyck() && p.len() == 2 * n, || format!("{name}({pi}) = {p} is not closed"))?;
                    if name == "phi" {
                        let m = lib(phi_via_minima(&pi))?;
                        ensure(m == p, || format!("phi({pi}) = {p} but phi_via_minima gives {m}"))?;
                    }
                    let back = lib(if name == "phi" { phi_inverse(&p) } else { psi_inverse(&p) })?;
                    ensure(back == pi, || format!("{name} round trip {pi} -> {p} -> {back}"))?;
                    ensure(images.insert(p.to_string()), || format!("{name} not injective at {p}"))?;
                }
                ensure(images == all_paths, || format!("{name} image at n={n} misses {} paths", all_paths.len() - images.len()))?;
                for p in &all_paths {
                    let p = dyck(p);
                    let pi = lib(if name == "phi" { phi_inverse(&p) } else { psi_inverse(&p) })?;
                    let again = lib(if name == "phi" { phi(&pi) } else { psi(&pi) })?;
                    ensure(again == p, || format!("inverse round trip {p} -> {pi} -> {again}"))?;
                }
            }
            Ok(())
        }));
    }
    out
}

/// Criterion: occurrence counts equal the path weights `w₁`/`w₂` of the images.
pub fn statistic_checks(max_n: usize) -> Vec<Check> {
    let mut out = vec![run("worked example: w1(3) = 8 and w2(3) = 7", || {
        let p = dyck(FIG_PATH);
        ensure(weight_w1(3, &p) == BigUint::from(8u32), || format!("w1 = {}", weight_w1(3, &p)))?;
        ensure(weight_w2(3, &p) == BigUint::from(7u32), || format!("w2 = {}", weight_w2(3, &p)))?;
        ensure(count_occurrences(&perm(FIG_132), &pat("123")) == BigUint::from(8u32), || "123 count".into())?;
        ensure(count_occurrences(&perm(FIG_123), &pat("213")) == BigUint::from(7u32), || "213 count".into())
    })];
    out.push(run(format!("occurrences of 12..k equal w1 of phi, n <= {max_n}, k in 2..=5"), || {
        for n in 0..=max_n {
            for pi in avoiders(n, &pat("132")) {
                let p = lib(phi(&pi))?;
                for k in PATTERN_LENGTHS {
                    let (c, w) = (count_occurrences(&pi, &lib(Pattern::increasing(k))?), weight_w1(k, &p));
                    ensure(c == w, || format!("{pi}, k={k}: {c} occurrences, w1 = {w}"))?;
                }
            }
        }
        Ok(())
    }));
    out.push(run(format!("occurrences of (k-1)..1k equal w2 of psi, n <= {max_n}, k in 2..=5"), || {
        for n in 0..=max_n {
            for pi in avoiders(n, &pat("123")) {
                let p = lib(psi(&pi))?;
                for k in PATTERN_LENGTHS {
                    let (c, w) = (count_occurrences(&pi, &lib(Pattern::descent_then_max(k))?), weight_w2(k, &p));
                    ensure(c == w, || format!("{pi}, k={k}: {c} occurrences, w2 = {w}"))?;
                }
            }
        }
        Ok(())
    }));
    out
}

// ----------------------------------------------------------- series ---

struct Censuses {
    /// `[n][k]` for 132-avoiders counting 12…k.
    inc: Vec<BTreeMap<usize, Census>>,
    /// 132-avoiders counting 23…k1.
    rot: Vec<BTreeMap<usize, Census>>,
    /// 123-avoiders counting (k−1)…1k.
    dtm: Vec<BTreeMap<usize, Census>>,
}

fn collect_censuses(max_n: usize) -> crate::Result<Censuses> {
    let cfg = oracle_config(max_n);
    let ks: Vec<usize> = PATTERN_LENGTHS.collect();
    let (mut inc, mut rot, mut dtm) = (Vec::new(), Vec::new(), Vec::new());
    for n in 0..=max_n {
        let mut stats: Vec<Pattern> = ks.iter().map(|&k| Pattern::increasing(k)).collect::<crate::Result<_>>()?;
        stats.extend(ks.iter().map(|&k| Pattern::rotated_increasing(k)).collect::<crate::Result<Vec<_>>>()?);
        let mut c = census_many_with(&cfg, n, &[pat("132")], &stats)?.into_iter();
        inc.push(ks.iter().map(|&k| (k, c.next().unwrap())).collect());
        rot.push(ks.iter().map(|&k| (k, c.next().unwrap())).collect());
        let stats: Vec<Pattern> = ks.iter().map(|&k| Pattern::descent_then_max(k)).collect::<crate::Result<_>>()?;
        let c = census_many_with(&cfg, n, &[pat("123")], &stats)?;
        dtm.push(ks.iter().copied().zip(c).collect());
    }
    Ok(Censuses { inc, rot, dtm })
}

fn series_matches(s: &TruncatedSeries, table: &[BTreeMap<usize, Census>], k: usize, r: u64) -> Outcome {
    for (n, row) in table.iter().enumerate() {
        let want = BigRational::from_integer(BigInt::from(row[&k].count(r)));
        ensure(s.coeff(n) == want, || format!("k={k}, r={r}, n={n}: series {} vs oracle {want}", s.coeff(n)))?;
    }
    Ok(())
}

/// Criterion: the bivariate continued fractions reproduce the censuses.
pub fn continued_fraction_checks(max_n: usize) -> Vec<Check> {
    let data = collect_censuses(max_n);
    let data = match data {
        Ok(d) => d,
        Err(e) => return vec![run("oracle censuses", || Err(e.to_string()))],
    };
    let mut out = Vec::new();
    for (label, table, gf) in [
        ("132-avoiders by 12..k", &data.inc, gf_theorem1 as fn(usize, usize) -> crate::Result<_>),
        ("123-avoiders by (k-1)..1k", &data.dtm, gf_theorem8),
    ] {
        out.push(run(format!("continued fraction for {label} equals census, n <= {max_n}"), || {
            for k in PATTERN_LENGTHS {
                let s = lib(gf(k, max_n))?;
                for (n, row) in table.iter().enumerate() {
                    let got = s.coeff(n).to_integer_map().ok_or("non-integral coefficient")?;
                    let want: BTreeMap<u64, BigInt> =
                        row[&k].histogram.iter().map(|(e, c)| (*e, BigInt::from(c.clone()))).collect();
                    ensure(got == want, || format!("k={k}, n={n}: {got:?} vs {want:?}"))?;
                }
                let cat: Vec<BigRational> = (0..=max_n).map(|n| BigRational::from_integer(catalan(n as u64).into())).collect();
                ensure(s.eval_y(&rat(1)).coeffs() == cat.as_slice(), || format!("k={k}: y=1 is not Catalan"))?;
            }
            Ok(())
        }));
    }
    out
}

/// Criterion: every closed form matches the censuses; the avoider series
/// coincide; y-strata of the fractions equal the closed forms.
pub fn closed_form_checks(max_n: usize) -> Vec<Check> {
    let data = match collect_censuses(max_n) {
        Ok(d) => d,
        Err(e) => return vec![run("oracle censuses", || Err(e.to_string()))],
    };
    let ks = || PATTERN_LENGTHS;
    vec![
        run(format!("avoiders of 132 and 12..k, n <= {max_n}"), || {
            ks().try_for_each(|k| series_matches(&lib(gf_avoiders_12k(k, max_n))?, &data.inc, k, 0))
        }),
        run(format!("exactly r occurrences of 12..k, r <= {MAX_R_12K}, n <= {max_n}"), || {
            for k in ks() {
                for r in 1..=MAX_R_12K {
                    series_matches(&lib(gf_exactly_r_12k(k, r, max_n))?, &data.inc, k, r as u64)?;
                }
            }
            Ok(())
        }),
        run(format!("avoiders of 132 and 23..k1, n <= {max_n}"), || {
            ks().try_for_each(|k| series_matches(&lib(gf_avoiders_23k1(k, max_n))?, &data.rot, k, 0))
        }),
        run(format!("exactly r occurrences of 23..k1, 1 <= r <= k-1, n <= {max_n}"), || {
            for k in ks().filter(|&k| k >= 3) {
                series_matches(&lib(gf_one_23k1(k, max_n))?, &data.rot, k, 1)?;
                for r in 1..k {
                    series_matches(&lib(gf_exactly_r_23k1(k, r, max_n))?, &data.rot, k, r as u64)?;
                }
            }
            Ok(())
        }),
        run(format!("avoiders of 123 and (k-1)..1k, n <= {max_n}"), || {
            ks().try_for_each(|k| series_matches(&lib(gf_avoiders_k1k(k, max_n))?, &data.dtm, k, 0))
        }),
        run(format!("exactly r occurrences of (k-1)..1k, 1 <= r <= k-1, n <= {max_n}"), || {
            for k in ks() {
                for r in 1..k {
                    series_matches(&lib(gf_exactly_r_k1k(k, r, max_n))?, &data.dtm, k, r as u64)?;
                }
            }
            Ok(())
        }),
        run(format!("three avoider series identical to order {SERIES_ORDER}"), || {
            for k in ks() {
                let a = lib(gf_avoiders_12k(k, SERIES_ORDER))?;
                ensure(a == lib(gf_avoiders_23k1(k, SERIES_ORDER))?, || format!("23..k1 differs at k={k}"))?;
                ensure(a == lib(gf_avoiders_k1k(k, SERIES_ORDER))?, || format!("(k-1)..1k differs at k={k}"))?;
            }
            Ok(())
        }),
        run(format!("y-strata of the continued fractions equal the closed forms to order {SERIES_ORDER}"), || {
            for k in ks() {
                let t1 = lib(gf_theorem1(k, SERIES_ORDER))?;
                ensure(t1.y_stratum(0) == lib(gf_avoiders_12k(k, SERIES_ORDER))?, || format!("12..k, k={k}, r=0"))?;
                for r in 1..=MAX_R_12K {
                    ensure(t1.y_stratum(r as u64) == lib(gf_exactly_r_12k(k, r, SERIES_ORDER))?, || {
                        format!("12..k, k={k}, r={r}")
                    })?;
                }
                let t8 = lib(gf_theorem8(k, SERIES_ORDER))?;
                ensure(t8.y_stratum(0) == lib(gf_avoiders_k1k(k, SERIES_ORDER))?, || format!("(k-1)..1k, k={k}, r=0"))?;
                for r in 1..k {
                    ensure(t8.y_stratum(r as u64) == lib(gf_exactly_r_k1k(k, r, SERIES_ORDER))?, || {
                        format!("(k-1)..1k, k={k}, r={r}")
                    })?;
                }
            }
            Ok(())
        }),
    ]
}

// --------------------------------------------------------- appendix ---

/// Small random rational: numerator in −3..=3, denominator in 1..=3.
pub fn small_rational(rng: &mut impl Rng) -> BigRational {
    BigRational::new(rng.gen_range(-3i64..=3).into(), rng.gen_range(1i64..=3).into())
}

fn random_table(rng: &mut impl Rng, heights: std::ops::RangeInclusive<usize>) -> HeightWeights {
    let start = *heights.start();
    let values: Vec<BigRational> = heights.map(|_| small_rational(rng)).collect();
    HeightWeights::from_values(start, values)
}

/// Criterion: strip generating functions, both continued fractions and the
/// Chebyshev specializations agree with direct path sums.
pub fn appendix_checks() -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(WEIGHT_SEED);
    let draws: Vec<(HeightWeights, HeightWeights, HeightWeights)> = (0..WEIGHT_DRAWS)
        .map(|_| {
            let b = random_table(&mut rng, 0..=PATH_MAX_LENGTH + 1);
            let l = random_table(&mut rng, 0..=PATH_MAX_LENGTH + 1);
            let nu = random_table(&mut rng, 0..=PATH_MAX_LENGTH + 1);
            (b, l, nu)
        })
        .collect();
    vec![
        run(
            format!(
                "strip series equals transfer DP ({WEIGHT_DRAWS} draws) and enumeration ({ENUMERATED_DRAWS} draws), \
                 K <= {STRIP_MAX_K}, length <= {PATH_MAX_LENGTH}"
            ),
            || {
                for (d, (b, l, _)) in draws.iter().enumerate() {
                    let sys = PolySystem::new(b.clone(), l.clone());
                    let spec = WeightSpec::motzkin(b.clone(), l.clone());
                    for k in 0..=STRIP_MAX_K {
                        for r in 0..=k {
                            for s in 0..=k {
                                let g = lib(strip_gf(&sys, k, r, s, PATH_MAX_LENGTH))?;
                                let dp = lib(strip_path_sum(b, l, k, r, s, PATH_MAX_LENGTH))?;
                                ensure(g == dp, || format!("draw {d}, K={k}, r={r}, s={s}: {g} vs {dp}"))?;
                                if d >= ENUMERATED_DRAWS {
                                    continue;
                                }
                                for len in 0..=PATH_MAX_LENGTH {
                                    let direct =
                                        lib(path_census(len, &spec, Some(k as u32), r as u32, s as u32))?;
                                    ensure(g.coeff(len) == direct, || {
                                        format!("draw {d}, K={k}, r={r}, s={s}, length {len}: {} vs {direct}", g.coeff(len))
                                    })?;
                                }
                            }
                        }
                    }
                }
                Ok(())
            },
        ),
        run(format!("Motzkin continued fraction equals path sums, length <= {PATH_MAX_LENGTH}"), || {
            for (d, (b, l, _)) in draws.iter().enumerate() {
                let cf = lib(cf_motzkin(
                    None,
                    marked_weights(b, "level", 1, PATH_MAX_LENGTH),
                    marked_weights(l, "down", 2, PATH_MAX_LENGTH),
                    PATH_MAX_LENGTH,
                ))?;
                let spec = WeightSpec::motzkin(b.clone(), l.clone());
                for len in 0..=PATH_MAX_LENGTH {
                    let direct = lib(path_census(len, &spec, None, 0, 0))?;
                    ensure(cf.coeff(len) == direct, || format!("draw {d}, length {len}: {} vs {direct}", cf.coeff(len)))?;
                }
            }
            Ok(())
        }),
        run(format!("peak-marked continued fraction equals path sums, length <= {PATH_MAX_LENGTH}"), || {
            for (d, (_, l, nu)) in draws.iter().enumerate() {
                let cf = lib(cf_peaked_dyck(
                    None,
                    marked_weights(nu, "peak", 2, PATH_MAX_LENGTH),
                    marked_weights(l, "down", 2, PATH_MAX_LENGTH),
                    PATH_MAX_LENGTH,
                ))?;
                let spec = WeightSpec::peaked(nu.clone(), l.clone());
                for len in 0..=PATH_MAX_LENGTH {
                    let direct = lib(path_census(len, &spec, None, 0, 0))?;
                    ensure(cf.coeff(len) == direct, || format!("draw {d}, length {len}: {} vs {direct}", cf.coeff(len)))?;
                }
            }
            Ok(())
        }),
        run("Chebyshev specializations of the recurrence, n <= 8", || {
            let half_x = Poly::new(vec![rat(0), BigRational::new(1.into(), 2.into())]);
            let shifted = Poly::new(vec![BigRational::new((-1).into(), 2.into()), BigRational::new(1.into(), 2.into())]);
            let zero = PolySystem::new(HeightWeights::constant(rat(0)), HeightWeights::constant(rat(1)));
            let one = PolySystem::new(HeightWeights::constant(rat(1)), HeightWeights::constant(rat(1)));
            for n in 0..=8 {
                let p = lib(zero.eval_pn(n))?;
                ensure(p == chebyshev_u(n).compose(&half_x), || format!("b=0: p_{n} = {p}"))?;
                let p = lib(one.eval_pn(n))?;
                ensure(p == chebyshev_u(n).compose(&shifted), || format!("b=1: p_{n} = {p}"))?;
                let ps = lib(zero.eval_pstar(n))?;
                ensure(ps.unsubstitute_square() == Some(q_poly(n)), || format!("p*_{n} = {ps} vs q_{n}"))?;
            }
            Ok(())
        }),
    ]
}

// ------------------------------------------------------ asymptotics ---

fn rel_error(exact: &BigRational, estimate: &BigFloat) -> f64 {
    let e = exact.to_f64().unwrap_or(f64::NAN);
    (float_to_f64(estimate) / e - 1.0).abs()
}

fn exact_12k(k: usize, r: usize, order: usize) -> crate::Result<TruncatedSeries> {
    if r == 0 {
        gf_avoiders_12k(k, order)
    } else {
        gf_exactly_r_12k(k, r, order)
    }
}

/// Criterion: exact special values, decreasing relative error, and the
/// minimal root of `q_k`.
pub fn asymptotic_checks() -> Vec<Check> {
    let prec = crate::asymptotics::DEFAULT_PRECISION;
    vec![
        run("estimate is exactly 2^(n-1) at k=3, r=0 and exactly 1 at k=2, r=0 (n <= 64)", || {
            for n in 1..=64u64 {
                let v = lib(asymptotic_count(3, 0, n, prec))?;
                let want = rational_to_float(&BigRational::from_integer(BigInt::from(1) << (n - 1)), prec);
                ensure(v == want, || format!("k=3, n={n}"))?;
                let v = lib(asymptotic_count(2, 0, n, prec))?;
                ensure(v == rational_to_float(&rat(1), prec), || format!("k=2, n={n}"))?;
            }
            Ok(())
        }),
        run(
            format!("relative error decreases from n=20 to n=40 and is below {REL_ERR_AT_40} at n=40, k in 3..=4, r <= 2"),
            || {
                for k in 3..=4 {
                    for r in 0..=2 {
                        let s = lib(exact_12k(k, r, 40))?;
                        let e20 = rel_error(&s.coeff(20), &lib(asymptotic_count(k, r, 20, prec))?);
                        let e40 = rel_error(&s.coeff(40), &lib(asymptotic_count(k, r, 40, prec))?);
                        // An estimate that is exact at both sizes has nothing left to decrease.
                        let decreasing = e40 < e20 || (e40 == 0.0 && e20 == 0.0);
                        ensure(decreasing && e40 < REL_ERR_AT_40, || {
                            format!("k={k}, r={r}: error {e20:.4} at 20, {e40:.4} at 40")
                        })?;
                    }
                }
                Ok(())
            },
        ),
        run(format!("minimal root of q_k equals 1/(4cos^2(pi/(k+1))) within {ROOT_TOLERANCE:e}, k <= 8"), || {
            for k in 2..=8 {
                let est = lib(leading_term(&q_poly(k - 1), &q_poly(k), prec))?;
                let want = growth_rate(k, prec + 64).reciprocal(prec + 64, astro_float::RoundingMode::ToEven);
                let diff = float_to_f64(&est.root.sub(&want, prec + 64, astro_float::RoundingMode::ToEven)).abs();
                ensure(diff < ROOT_TOLERANCE, || format!("k={k}: difference {diff:e}"))?;
            }
            Ok(())
        }),
        run(format!("leading term of the avoider series equals the closed estimate within {LEADING_TERM_TOLERANCE:e}, k <= 6"), || {
            for k in 2..=6 {
                let est = lib(leading_term(&q_poly(k - 1), &q_poly(k), prec))?;
                for n in [10u64, 25, 50] {
                    let a = float_to_f64(&est.estimate(n));
                    let b = float_to_f64(&lib(asymptotic_count(k, 0, n, prec))?);
                    let rel = (a / b - 1.0).abs();
                    ensure(rel < LEADING_TERM_TOLERANCE, || format!("k={k}, n={n}: {a} vs {b}"))?;
                }
            }
            Ok(())
        }),
    ]
}

// --------------------------------------------------- reproducibility ---

/// Criterion: results are exact and identical across worker counts, and the
/// suites run at desk scale.
pub fn reproducibility_checks(max_n: usize, elapsed: Option<Duration>) -> Vec<Check> {
    let mut out = vec![run(format!("census identical with 1 and 4 workers, n = {max_n}"), || {
        let go = |threads: usize| -> Result<Vec<Census>, String> {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| e.to_string())?;
            pool.install(|| lib(census_many_with(&oracle_config(max_n), max_n, &[pat("132")], &[pat("123"), pat("1234")])))
        };
        ensure(go(1)? == go(4)?, || "histograms differ".into())
    })];
    out.push(run("series and estimates recompute identically", || {
        let a = (lib(gf_theorem1(4, SERIES_ORDER))?, lib(gf_exactly_r_23k1(4, 2, SERIES_ORDER))?);
        let b = (lib(gf_theorem1(4, SERIES_ORDER))?, lib(gf_exactly_r_23k1(4, 2, SERIES_ORDER))?);
        ensure(a == b, || "series differ".into())?;
        let x = lib(asymptotic_count(5, 2, 30, 128))?;
        let y = lib(asymptotic_count(5, 2, 30, 128))?;
        ensure(x == y, || "estimates differ".into())
    }));
    if let Some(t) = elapsed {
        out.push(run(format!("suites finish within {}s", DESK_BUDGET.as_secs()), || {
            ensure(t <= DESK_BUDGET, || format!("took {:.1}s", t.as_secs_f64()))
        }));
    }
    out
}

/// Runs a suite; `All` also records reproducibility and the time budget.
pub fn run_suite(suite: Suite, max_n: usize) -> Vec<Check> {
    let start = Instant::now();
    let mut out = Vec::new();
    if matches!(suite, Suite::Bijections | Suite::All) {
        out.extend(bijection_checks(max_n));
        out.extend(statistic_checks(max_n));
    }
    if matches!(suite, Suite::Series | Suite::All) {
        out.extend(continued_fraction_checks(max_n));
        out.extend(closed_form_checks(max_n));
    }
    if matches!(suite, Suite::Appendix | Suite::All) {
        out.extend(appendix_checks());
    }
    if matches!(suite, Suite::Asymptotics | Suite::All) {
        out.extend(asymptotic_checks());
    }
    if suite == Suite::All {
        out.extend(reproducibility_checks(max_n, Some(start.elapsed())));
    }
    out
}
