use apery_core::coeff::a_lambda_coeff;
use apery_core::congruence::suite::{apery_table, sample_indices, supercongruence_grid};
use apery_core::congruence::*;
use apery_core::recurrence::{run_cubic, run_quadratic, CubicParams, QuadraticParams};
use apery_core::series::{
    constant_term_power, eta_quotient_qexp, euler_product, expand_with, family_denominator,
    macmahon_sides, mixed_constant_term, modular_parametrization_sides, EtaFactor, ExpandConfig,
    IntMatrix, LaurentPoly, SparsePoly,
};
use apery_core::{Error, FamilySpec, MultiIndex};
use num_bigint::BigInt;
use rand::Rng;
use serde_json::{json, Value};

use crate::args::{Command, FamilyArgs, GridArgs, Preset, VerifyCommand};
use crate::output::Rendered;

pub type CliResult<T> = Result<T, Error>;

fn usage(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

impl FamilyArgs {
    pub fn spec(&self) -> CliResult<FamilySpec> {
        match (&self.sequence, &self.lambda) {
            (Some(seq), _) => Ok(seq.spec()),
            (None, Some(lambda)) => Ok(FamilySpec::new(lambda.clone(), self.alpha)),
            (None, None) => Err(usage("either --lambda or --sequence is required")),
        }
    }
}

fn values(header: &str, items: &[(String, BigInt)]) -> Rendered {
    Rendered {
        json: Value::Array(
            items
                .iter()
                .map(|(k, v)| json!({ header: k, "value": v.to_string() }))
                .collect(),
        ),
        csv: std::iter::once(vec![header.to_string(), "value".to_string()])
            .chain(items.iter().map(|(k, v)| vec![k.clone(), v.to_string()]))
            .collect(),
        text: items.iter().map(|(_, v)| format!("{v}\n")).collect(),
        ..Rendered::default()
    }
}

pub fn run(command: &Command) -> CliResult<Rendered> {
    match command {
        Command::Coeff { family, n } => {
            let spec = family.spec()?;
            let value = a_lambda_coeff(&spec, n)?;
            let mut out = values("n", &[(n.to_string(), value.clone())]);
            out.json = json!({
                "lambda": spec.lambda.parts(),
                "alpha": spec.alpha,
                "n": n.entries(),
                "value": value.to_string(),
            });
            Ok(out)
        }
        Command::Diagonal { family, max } => {
            let spec = family.spec()?;
            if *max < 0 {
                return Err(usage("--max must be nonnegative"));
            }
            let items = (0..=*max)
                .map(|n| {
                    Ok((
                        n.to_string(),
                        a_lambda_coeff(&spec, &MultiIndex::diagonal(spec.dim(), n))?,
                    ))
                })
                .collect::<CliResult<Vec<_>>>()?;
            Ok(values("n", &items))
        }
        Command::Expand {
            family,
            preset,
            d,
            b,
            bounds,
            max_cells,
        } => {
            let q = match preset {
                Some(Preset::Apery5) => SparsePoly::apery_five_variable(),
                Some(Preset::Scan) => SparsePoly::scan_family(*d, *b),
                None => family_denominator(&family.spec()?),
            };
            let dim = q.dim();
            let bounds = match bounds.len() {
                0 => return Err(usage("--bounds is required")),
                1 => vec![bounds[0]; dim],
                k if k == dim => bounds.clone(),
                k => {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        got: k,
                    })
                }
            };
            let mut config = ExpandConfig::default();
            if let Some(cells) = max_cells {
                config.max_cells = *cells;
            }
            let table = expand_with(&q, &bounds, config)?;
            let export = table.to_export();
            let mut csv: Vec<Vec<String>> = vec![(1..=dim)
                .map(|i| format!("n{i}"))
                .chain(std::iter::once("c".to_string()))
                .collect()];
            let mut text = String::new();
            for e in &export.entries {
                let idx: Vec<String> = e.n.iter().map(|v| v.to_string()).collect();
                text.push_str(&format!("({}) {}\n", idx.join(","), e.c));
                csv.push(
                    idx.into_iter()
                        .chain(std::iter::once(e.c.clone()))
                        .collect(),
                );
            }
            Ok(Rendered {
                json: serde_json::to_value(&export).expect("table serializes"),
                csv,
                text,
                ..Rendered::default()
            })
        }
        Command::Sequence {
            cubic,
            quadratic,
            max,
        } => {
            let terms = match (cubic, quadratic) {
                (Some(c), None) => match c.as_slice() {
                    &[a, b, c, d] => run_cubic(CubicParams::new(a, b, c, d), *max)?,
                    _ => return Err(usage("--cubic takes four values a,b,c,d")),
                },
                (None, Some(q)) => match q.as_slice() {
                    &[a, b, c] => run_quadratic(QuadraticParams::new(a, b, c), *max)?,
                    _ => return Err(usage("--quadratic takes three values a,b,c")),
                },
                _ => return Err(usage("exactly one of --cubic or --quadratic is required")),
            };
            let items: Vec<_> = terms
                .into_iter()
                .enumerate()
                .map(|(n, v)| (n.to_string(), v))
                .collect();
            Ok(values("n", &items))
        }
        Command::Ct { max, n } => match (max, n) {
            (Some(max), None) => {
                let l = LaurentPoly::apery();
                let items: Vec<_> = (0..=*max)
                    .map(|k| (k.to_string(), constant_term_power(&l, k)))
                    .collect();
                Ok(values("n", &items))
            }
            (None, Some(n)) => {
                let value = mixed_constant_term(&LaurentPoly::apery_forms(), n)?;
                Ok(values("n", &[(n.to_string(), value)]))
            }
            _ => Err(usage("exactly one of --max or --n is required")),
        },
        Command::Macmahon { matrix, n } => {
            let a = match matrix {
                Some(text) => parse_matrix(text)?,
                None => IntMatrix::apery(),
            };
            let (series, forms) = macmahon_sides(&a, n)?;
            let equal = series == forms;
            Ok(Rendered {
                json: json!({
                    "matrix": a.rows(),
                    "n": n.entries(),
                    "series": series.to_string(),
                    "forms": forms.to_string(),
                    "equal": equal,
                }),
                csv: vec![
                    vec!["series".into(), "forms".into(), "equal".into()],
                    vec![series.to_string(), forms.to_string(), equal.to_string()],
                ],
                text: format!("series {series}\nforms {forms}\nequal {equal}\n"),
                theorem_failed: !equal,
                ..Rendered::default()
            })
        }
        Command::Eta { order, factors } => match factors {
            Some(text) => {
                let factors = parse_factors(text)?;
                // A fractional leading power q^{num/24} is left off and reported.
                let (series, omitted) = match eta_quotient_qexp(&factors, *order) {
                    Ok(s) => (s, None),
                    Err(Error::NonIntegralLeadingExponent { numerator }) => (
                        euler_product(&factors, *order)?,
                        Some(format!("{numerator}/24")),
                    ),
                    Err(e) => return Err(e),
                };
                let items: Vec<_> = series
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(i, c)| (i.to_string(), c.clone()))
                    .collect();
                let mut out = values("power", &items);
                out.json = json!({
                    "omitted_leading_power": omitted,
                    "coeffs": series.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                });
                Ok(out)
            }
            None => {
                let (lhs, rhs) = modular_parametrization_sides(*order)?;
                let equal = lhs == rhs;
                let mut csv = vec![vec!["power".into(), "sum".into(), "form".into()]];
                let mut text = String::new();
                for (i, (a, b)) in lhs.coeffs().iter().zip(rhs.coeffs()).enumerate() {
                    csv.push(vec![i.to_string(), a.to_string(), b.to_string()]);
                    text.push_str(&format!("{i} {a} {b}\n"));
                }
                text.push_str(&format!("equal {equal}\n"));
                Ok(Rendered {
                    json: json!({
                        "order": order,
                        "sum": lhs.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                        "form": rhs.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                        "equal": equal,
                    }),
                    csv,
                    text,
                    theorem_failed: !equal,
                    ..Rendered::default()
                })
            }
        },
        Command::Verify { claim, .. } => verify(claim),
    }
}

fn parse_matrix(text: &str) -> CliResult<IntMatrix> {
    let rows = text
        .split(';')
        .map(|row| {
            row.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i64>()
                        .map_err(|e| usage(format!("bad matrix entry {t:?}: {e}")))
                })
                .collect::<CliResult<Vec<_>>>()
        })
        .collect::<CliResult<Vec<_>>>()?;
    IntMatrix::new(rows)
}

fn parse_factors(text: &str) -> CliResult<Vec<EtaFactor>> {
    text.split(',')
        .map(|f| {
            let (s, e) = f
                .split_once(':')
                .ok_or_else(|| usage(format!("eta factor {f:?} is not scale:exponent")))?;
            let scale = s
                .trim()
                .parse()
                .map_err(|e| usage(format!("bad scale {s:?}: {e}")))?;
            let exponent = e
                .trim()
                .parse()
                .map_err(|err| usage(format!("bad exponent {e:?}: {err}")))?;
            Ok(EtaFactor::new(scale, exponent))
        })
        .collect()
}

fn config(grid: &GridArgs) -> SuiteConfig {
    SuiteConfig {
        seed: grid.seed,
        samples: grid.samples,
        only: Vec::new(),
    }
}

fn report(claim: &str, class: ClaimClass, grid: String, cells: Vec<CongruenceCell>) -> Rendered {
    Rendered::from_report(&CongruenceReport::new(claim, class, grid, cells))
}

fn each_p_r<T>(grid: &GridArgs, mut f: impl FnMut(u64, u32) -> CliResult<T>) -> CliResult<Vec<T>> {
    let mut out = Vec::new();
    for &p in &grid.primes {
        for &r in &grid.r {
            out.push(f(p, r)?);
        }
    }
    Ok(out)
}

fn describe(grid: &GridArgs) -> String {
    format!(
        "primes {:?}, r {:?}, seed {}",
        grid.primes, grid.r, grid.seed
    )
}

fn verify(claim: &VerifyCommand) -> CliResult<Rendered> {
    use VerifyCommand as V;
    match claim {
        V::Sc {
            family,
            n,
            exponent,
            grid,
        } => {
            let spec = family.spec()?;
            let points = match n {
                Some(n) => vec![n.clone()],
                None => {
                    let lo = if spec.lambda.max_part() >= 2 { -4 } else { 0 };
                    sample_indices(&mut config(grid).rng("sc"), spec.dim(), lo, 4, grid.samples)
                }
            };
            let cells = supercongruence_grid(&spec, &points, &grid.primes, &grid.r, *exponent)?;
            Ok(report(
                "supercongruence",
                ClaimClass::Theorem,
                format!(
                    "{spec}, {} points, {}, exponent {exponent}",
                    points.len(),
                    describe(grid)
                ),
                cells,
            ))
        }
        V::ConjectureG { n, grid } | V::ConjectureZ { n, grid } => {
            let is_g = matches!(claim, V::ConjectureG { .. });
            let (name, d) = if is_g {
                ("conjecture-g", 3)
            } else {
                ("conjecture-z", 4)
            };
            let points = match n {
                Some(n) => vec![n.clone()],
                None => sample_indices(&mut config(grid).rng(name), d, 0, 3, grid.samples),
            };
            let mut cells = Vec::new();
            for n in &points {
                cells.extend(each_p_r(grid, |p, r| {
                    if is_g {
                        verify_conjecture_g(n, p, r)
                    } else {
                        verify_conjecture_z(n, p, r)
                    }
                })?);
            }
            Ok(report(
                name,
                ClaimClass::ConjectureSupport,
                format!("{} points, {}", points.len(), describe(grid)),
                cells,
            ))
        }
        V::Dwork { max, grid } => {
            let top = grid
                .primes
                .iter()
                .flat_map(|&p| grid.r.iter().map(move |&r| p.pow(r)))
                .max()
                .unwrap_or(1);
            let table = apery_table((top * max + max) as usize);
            let value = |i: i64| table[i as usize].clone();
            let mut cells = Vec::new();
            for m in 0..=*max {
                for n in 0..=*max {
                    cells.extend(each_p_r(grid, |p, r| dwork_cell_with(value, m, n, p, r))?);
                }
            }
            Ok(report(
                "dwork",
                ClaimClass::Theorem,
                format!("m, n <= {max}, {}", describe(grid)),
                cells,
            ))
        }
        V::Lucas { max, grid } => {
            let mut cells = Vec::new();
            for &p in &grid.primes {
                let limit = max.unwrap_or_else(|| p.pow(3));
                for n in 0..limit {
                    cells.push(verify_lucas(n, p)?);
                }
            }
            Ok(report(
                "lucas",
                ClaimClass::Theorem,
                format!("primes {:?}", grid.primes),
                cells,
            ))
        }
        V::Jacobsthal { a, b, grid } => {
            let pairs = match (a, b) {
                (Some(a), Some(b)) => vec![(*a, *b)],
                _ => {
                    let mut rng = config(grid).rng("jacobsthal");
                    (0..grid.samples)
                        .map(|_| (rng.gen_range(-30..=30), rng.gen_range(-30..=30)))
                        .collect()
                }
            };
            let mut cells = Vec::new();
            for &(a, b) in &pairs {
                for &p in &grid.primes {
                    cells.push(verify_jacobsthal(a, b, p)?);
                }
            }
            Ok(report(
                "jacobsthal",
                ClaimClass::Theorem,
                format!("{} pairs, {}", pairs.len(), describe(grid)),
                cells,
            ))
        }
        V::Ljunggren { a, b, grid } => {
            let pairs = match (a, b) {
                (Some(a), Some(b)) => vec![(*a, *b)],
                _ => {
                    let mut rng = config(grid).rng("ljunggren");
                    (0..grid.samples)
                        .map(|_| {
                            let a = rng.gen_range(0..=20);
                            (a, rng.gen_range(0..=a))
                        })
                        .collect()
                }
            };
            let mut cells = Vec::new();
            for &(a, b) in &pairs {
                for &p in &grid.primes {
                    cells.push(verify_ljunggren(a, b, p)?);
                }
            }
            Ok(report(
                "ljunggren",
                ClaimClass::Theorem,
                format!("{} pairs, {}", pairs.len(), describe(grid)),
                cells,
            ))
        }
        V::Powersum { eps, grid } => {
            let mut cells = Vec::new();
            for &e in eps {
                cells.extend(each_p_r(grid, |p, r| verify_powersum(p, r, e))?);
            }
            Ok(report(
                "powersum",
                ClaimClass::Theorem,
                format!("eps {eps:?}, {}", describe(grid)),
                cells,
            ))
        }
        V::Lemma53 {
            lambda,
            n,
            k,
            exponent,
            grid,
        } => {
            let points = match (n, k) {
                (Some(n), Some(k)) => vec![(n.clone(), *k)],
                _ => {
                    let mut rng = config(grid).rng("lemma53");
                    (0..grid.samples)
                        .map(|_| {
                            let n = sample_indices(&mut rng, lambda.dim(), -3, 3, 1).remove(0);
                            (n, rng.gen_range(-6..=6))
                        })
                        .collect()
                }
            };
            let mut cells = Vec::new();
            for (n, k) in &points {
                cells.extend(each_p_r(grid, |p, r| {
                    verify_term_lemma(lambda, n, *k, p, r, *exponent)
                })?);
            }
            Ok(report(
                "lemma53",
                ClaimClass::Theorem,
                format!(
                    "lambda {lambda}, {} points, {}, exponent {exponent}",
                    points.len(),
                    describe(grid)
                ),
                cells,
            ))
        }
        V::Lemma54 { m, k, grid } => {
            let points = match (m, k) {
                (Some(m), Some(k)) => vec![(*m, *k)],
                _ => {
                    let mut rng = config(grid).rng("lemma54");
                    (0..grid.samples)
                        .map(|_| (rng.gen_range(-4..=4), rng.gen_range(-6..=6)))
                        .collect()
                }
            };
            let mut cells = Vec::new();
            for &(m, k) in &points {
                cells.extend(each_p_r(grid, |p, r| verify_binom_lemma4(m, k, p, r))?);
            }
            Ok(report(
                "lemma54",
                ClaimClass::Theorem,
                format!("{} points, {}", points.len(), describe(grid)),
                cells,
            ))
        }
        V::Lemma55 { m1, m2, k, grid } => {
            let points = match (m1, m2, k) {
                (Some(a), Some(b), Some(k)) => vec![(*a, *b, *k)],
                _ => {
                    let mut rng = config(grid).rng("lemma55");
                    (0..grid.samples)
                        .map(|_| {
                            (
                                rng.gen_range(-4..=4),
                                rng.gen_range(-4..=4),
                                rng.gen_range(-6..=6),
                            )
                        })
                        .collect()
                }
            };
            let mut cells = Vec::new();
            for &(a, b, k) in &points {
                cells.extend(each_p_r(grid, |p, r| verify_binom_lemma5(a, b, k, p, r))?);
            }
            Ok(report(
                "lemma55",
                ClaimClass::Theorem,
                format!("{} points, {}", points.len(), describe(grid)),
                cells,
            ))
        }
        V::Reflect { max } => {
            let cells = (1..=*max)
                .map(reflect_a_cell)
                .chain((1..=*max).map(reflect_b_cell))
                .collect();
            Ok(report(
                "reflect",
                ClaimClass::Theorem,
                format!("1 <= n <= {max}"),
                cells,
            ))
        }
        V::Identity25 { max } => {
            let cells = (0..=*max).map(identity25_cell).collect();
            Ok(report(
                "identity25",
                ClaimClass::Theorem,
                format!("0 <= n <= {max}"),
                cells,
            ))
        }
        V::ScanB {
            d,
            b_range,
            exclude_zero,
            exponent,
            grid_max,
            grid,
        } => {
            let (lo, hi) = match b_range.as_slice() {
                [lo, hi] if lo <= hi => (*lo, *hi),
                _ => return Err(usage("--b-range must be lo,hi with lo <= hi")),
            };
            let bs: Vec<i64> = (lo..=hi).filter(|&b| !(*exclude_zero && b == 0)).collect();
            let r = match grid.r.as_slice() {
                [r] => *r,
                _ => return Err(usage("scan-b takes a single --r")),
            };
            let scan = scan_b(
                *d,
                &bs,
                &grid.primes,
                r,
                *exponent,
                &diagonal_grid(*d, *grid_max),
            )?;
            let mut out = Rendered::from_report(&scan.report);
            out.json = serde_json::to_value(&scan).expect("scan serializes");
            out.text = format!("survivors {:?}\n{}", scan.survivors, out.text);
            Ok(out)
        }
        V::Suite {
            seed,
            samples,
            only,
        } => {
            if let Some(bad) = only.iter().find(|o| !BATTERIES.contains(&o.as_str())) {
                return Err(usage(format!(
                    "unknown battery {bad:?}; expected one of {BATTERIES:?}"
                )));
            }
            let report = run_suite(&SuiteConfig {
                seed: *seed,
                samples: *samples,
                only: only.clone(),
            })?;
            Ok(Rendered::from_suite(&report))
        }
    }
}
