use serde::{Deserialize, Serialize};

use super::oracle::{window_derham, window_koszul_x, window_y_socle};
use super::report::{CheckResult, VerificationReport, Witness};
use super::suite::{theorem_suite, SuiteOptions};
use crate::cli::IdealSpec;
use crate::monocech::{
    DimValue, LocalCohomology, MonomialIdeal, PatternShape, SignPattern, SupportSweep, VariableContext,
};
use crate::weylact::{
    derham_homology, euler_eigencheck, four_term_check, gen_eulerian_exponent, koszul_homology_x, y_socle, CechModule,
    HomologyKind, LocalizationModule, PatternModule,
};

/// Which module a Weyl-action expectation refers to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleRef {
    /// `H^i_I(R)`
    Cohomology(usize),
    /// `R` itself
    Ring,
    /// `R` with the named variables inverted
    Localization(Vec<String>),
}

impl ModuleRef {
    pub fn build(&self, ideal: &MonomialIdeal) -> Result<Box<dyn PatternModule>, String> {
        let ctx = ideal.context();
        Ok(match self {
            ModuleRef::Cohomology(i) => Box::new(CechModule::new(ideal, *i)),
            ModuleRef::Ring => Box::new(LocalizationModule::ring(ctx.clone())),
            ModuleRef::Localization(names) => {
                let vars = names
                    .iter()
                    .map(|n| ctx.index_of(n).ok_or_else(|| format!("unknown variable {n:?}")))
                    .collect::<Result<Vec<_>, _>>()?;
                Box::new(LocalizationModule::new(ctx.clone(), SignPattern::from_vars(vars)))
            }
        })
    }
}

/// One expected value. Spec files carry these in their `expect` list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "check", rename_all = "snake_case")]
pub enum Check {
    Shape {
        index: usize,
        shape: PatternShape,
    },
    Nonzero {
        index: usize,
        degree: i64,
        nonzero: bool,
    },
    Dimension {
        index: usize,
        degree: i64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        strand: Option<Vec<i64>>,
        dim: DimValue,
    },
    Support {
        index: usize,
        degree: i64,
        primes: Vec<String>,
    },
    Homology {
        module: ModuleRef,
        var: String,
        kind: HomologyKind,
        degree: i64,
        h1: DimValue,
        h0: DimValue,
    },
    YSocle {
        index: usize,
        degree: i64,
        dim: DimValue,
    },
    Euler {
        module: ModuleRef,
        alpha: Vec<i64>,
        eigenvalue: i64,
    },
}

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    /// a published worked example
    Reference,
    /// computed independently (by hand or with the window oracle)
    #[default]
    Derived,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expectation {
    #[serde(flatten)]
    pub check: Check,
    #[serde(default)]
    pub origin: Origin,
}

impl Expectation {
    pub fn reference(check: Check) -> Self {
        Expectation {
            check,
            origin: Origin::Reference,
        }
    }

    pub fn derived(check: Check) -> Self {
        Expectation {
            check,
            origin: Origin::Derived,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenCase {
    pub id: String,
    pub description: String,
    pub spec: IdealSpec,
}

impl GoldenCase {
    fn new(id: &str, description: &str, d: usize, m: usize, gens: &[&str], expect: Vec<Expectation>) -> Self {
        let ctx = VariableContext::standard(d, m).expect("valid context");
        GoldenCase {
            id: id.into(),
            description: description.into(),
            spec: IdealSpec {
                deg0_vars: ctx.y_vars().map(|v| ctx.name(v).to_string()).collect(),
                deg1_vars: ctx.x_vars().map(|v| ctx.name(v).to_string()).collect(),
                generators: gens.iter().map(|g| g.to_string()).collect(),
                expect,
            },
        }
    }

    pub fn ideal(&self) -> MonomialIdeal {
        self.spec.to_ideal().expect("corpus specs are valid")
    }
}

fn fin(n: u64) -> DimValue {
    DimValue::finite(n)
}

fn homology(module: ModuleRef, var: &str, kind: HomologyKind, degree: i64, h1: u64, h0: u64) -> Check {
    Check::Homology {
        module,
        var: var.into(),
        kind,
        degree,
        h1: fin(h1),
        h0: fin(h0),
    }
}

/// The built-in worked examples with their expected values.
pub fn golden_corpus() -> Vec<GoldenCase> {
    use Expectation as E;
    use HomologyKind::{Derham, Mult};
    let mut cases = Vec::new();

    for m in 1..=4usize {
        let gens: Vec<String> = (1..=m).map(|j| format!("X{j}")).collect();
        let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
        let mm = m as i64;
        let mut expect = vec![
            E::reference(Check::Shape {
                index: m,
                shape: PatternShape::NegTailOnly,
            }),
            E::reference(Check::Dimension {
                index: m,
                degree: -mm,
                strand: None,
                dim: fin(1),
            }),
            E::reference(Check::Dimension {
                index: m,
                degree: -mm - 1,
                strand: None,
                dim: fin(m as u64),
            }),
            E::reference(Check::Nonzero {
                index: m,
                degree: -mm + 1,
                nonzero: false,
            }),
        ];
        if m == 2 {
            expect.push(E::derived(Check::Euler {
                module: ModuleRef::Cohomology(2),
                alpha: vec![-1, -1],
                eigenvalue: -2,
            }));
            expect.push(E::derived(homology(ModuleRef::Cohomology(2), "X2", Mult, -1, 1, 0)));
        }
        cases.push(GoldenCase::new(
            &format!("irrelevant-m{m}"),
            &format!("the ideal of all degree-1 variables, m = {m}"),
            0,
            m,
            &refs,
            expect,
        ));
    }

    cases.push(GoldenCase::new(
        "extended-prime-d1",
        "a coefficient variable extended to R",
        1,
        1,
        &["Y1"],
        (0..=3)
            .map(|n| {
                E::derived(Check::YSocle {
                    index: 1,
                    degree: n,
                    dim: fin(1),
                })
            })
            .chain([
                E::reference(Check::Shape {
                    index: 1,
                    shape: PatternShape::NonnegOnly,
                }),
                E::derived(Check::YSocle {
                    index: 1,
                    degree: -1,
                    dim: fin(0),
                }),
                E::derived(Check::Support {
                    index: 1,
                    degree: 0,
                    primes: vec!["(Y1)".into()],
                }),
                E::derived(Check::Dimension {
                    index: 1,
                    degree: 2,
                    strand: Some(vec![-1]),
                    dim: fin(1),
                }),
            ])
            .collect(),
    ));

    cases.push(GoldenCase::new(
        "extended-prime-d2",
        "the maximal ideal of the coefficients extended to R",
        2,
        1,
        &["Y1", "Y2"],
        vec![
            E::reference(Check::Shape {
                index: 2,
                shape: PatternShape::NonnegOnly,
            }),
            E::derived(Check::Nonzero {
                index: 2,
                degree: -1,
                nonzero: false,
            }),
            E::derived(Check::YSocle {
                index: 2,
                degree: 0,
                dim: fin(1),
            }),
        ],
    ));

    cases.push(GoldenCase::new(
        "two-generator",
        "the ideal (Y1*Y2, Y1*X1)",
        2,
        1,
        &["Y1*Y2", "Y1*X1"],
        vec![
            E::reference(Check::Shape {
                index: 1,
                shape: PatternShape::NonnegOnly,
            }),
            E::reference(Check::Nonzero {
                index: 1,
                degree: 0,
                nonzero: true,
            }),
            E::derived(Check::Shape {
                index: 2,
                shape: PatternShape::NegTailOnly,
            }),
            E::derived(Check::Support {
                index: 1,
                degree: 0,
                primes: vec!["(Y1)".into()],
            }),
            E::derived(Check::YSocle {
                index: 2,
                degree: -1,
                dim: fin(0),
            }),
            E::derived(Check::Dimension {
                index: 1,
                degree: 0,
                strand: Some(vec![-1, 0]),
                dim: fin(1),
            }),
        ],
    ));

    cases.push(GoldenCase::new(
        "principal-x",
        "a principal ideal in one of two degree-1 variables",
        0,
        2,
        &["X1"],
        vec![
            E::reference(Check::Shape {
                index: 1,
                shape: PatternShape::AllZ,
            }),
            E::reference(Check::Dimension {
                index: 1,
                degree: 0,
                strand: None,
                dim: DimValue::Infinite,
            }),
            E::derived(homology(ModuleRef::Cohomology(1), "X2", Mult, -1, 0, 1)),
            E::derived(homology(ModuleRef::Cohomology(1), "X2", Mult, 0, 0, 0)),
        ],
    ));

    cases.push(GoldenCase::new(
        "principal-x-d1",
        "a principal degree-1 ideal over one coefficient variable",
        1,
        2,
        &["X1"],
        vec![E::reference(Check::Shape {
            index: 1,
            shape: PatternShape::AllZ,
        })],
    ));

    cases.push(GoldenCase::new(
        "polynomial-ring-m1",
        "R = K[X1] under X1 and its derivative",
        0,
        1,
        &["X1"],
        vec![
            E::derived(homology(ModuleRef::Ring, "X1", Mult, 0, 0, 1)),
            E::derived(homology(ModuleRef::Ring, "X1", Mult, 1, 0, 0)),
            E::derived(homology(ModuleRef::Ring, "X1", Derham, -1, 1, 0)),
            E::derived(homology(ModuleRef::Ring, "X1", Derham, 0, 0, 0)),
            E::derived(Check::Euler {
                module: ModuleRef::Localization(vec!["X1".into()]),
                alpha: vec![-3],
                eigenvalue: -3,
            }),
        ],
    ));

    cases.push(GoldenCase::new(
        "injective-hull-m1",
        "E = H^1_(X1)(K[X1]) under X1 and its derivative",
        0,
        1,
        &["X1"],
        vec![
            E::derived(homology(ModuleRef::Cohomology(1), "X1", Mult, 0, 1, 0)),
            E::derived(homology(ModuleRef::Cohomology(1), "X1", Mult, -1, 0, 0)),
            E::derived(homology(ModuleRef::Cohomology(1), "X1", Derham, -1, 0, 1)),
            E::derived(homology(ModuleRef::Cohomology(1), "X1", Derham, -2, 0, 0)),
        ],
    ));

    cases.push(GoldenCase::new(
        "polynomial-ring-m2",
        "R = K[X1, X2] under the second derivative",
        0,
        2,
        &["X1", "X2"],
        (-1..=3)
            .map(|j| E::derived(homology(ModuleRef::Ring, "X2", Derham, j, 1, 0)))
            .chain([
                E::derived(homology(ModuleRef::Ring, "X2", Derham, -2, 0, 0)),
                E::derived(Check::Euler {
                    module: ModuleRef::Ring,
                    alpha: vec![2, 0],
                    eigenvalue: 2,
                }),
            ])
            .collect(),
    ));

    cases.push(GoldenCase::new(
        "mixed-powers",
        "non-squarefree generators mixing both kinds of variables",
        1,
        2,
        &["Y1^2*X1", "X2^3", "X1^2*X2"],
        vec![],
    ));

    cases
}

fn evaluate(ideal: &MonomialIdeal, check: &Check) -> Result<(), String> {
    let lc = || LocalCohomology::new(ideal);
    let var = |name: &str| {
        ideal
            .context()
            .index_of(name)
            .ok_or_else(|| format!("unknown variable {name:?}"))
    };
    let expect = |ok: bool, got: String| if ok { Ok(()) } else { Err(format!("got {got}")) };
    match check {
        Check::Shape { index, shape } => {
            let got = lc().shape(*index).map_err(|e| e.to_string())?;
            expect(got == *shape, got.to_string())
        }
        Check::Nonzero { index, degree, nonzero } => {
            let got = lc().piece_nonzero(*index, *degree);
            expect(got == *nonzero, got.to_string())
        }
        Check::Dimension {
            index,
            degree,
            strand,
            dim,
        } => {
            let got = match strand {
                Some(y) => lc().strand_dimension(*index, y, *degree),
                None => lc().piece_dimension(*index, *degree),
            }
            .map_err(|e| e.to_string())?;
            expect(got == *dim, got.to_string())
        }
        Check::Support { index, degree, primes } => {
            let got: Vec<String> = SupportSweep::new(ideal)
                .min_primes(*index, *degree)
                .iter()
                .map(|p| p.display(ideal.context()))
                .collect();
            expect(got == *primes, format!("{got:?}"))
        }
        Check::Homology {
            module,
            var: name,
            kind,
            degree,
            h1,
            h0,
        } => {
            let module = module.build(ideal)?;
            let v = var(name)?;
            let got = match kind {
                HomologyKind::Mult => koszul_homology_x(module.as_ref(), v, *degree),
                HomologyKind::Derham => derham_homology(module.as_ref(), v, *degree),
            }
            .map_err(|e| e.to_string())?;
            expect(
                got.h1 == *h1 && got.h0 == *h0,
                format!("H_1 = {}, H_0 = {}", got.h1, got.h0),
            )
        }
        Check::YSocle { index, degree, dim } => {
            let got = y_socle(&CechModule::new(ideal, *index), *degree).map_err(|e| e.to_string())?;
            expect(got == *dim, got.to_string())
        }
        Check::Euler {
            module,
            alpha,
            eigenvalue,
        } => {
            let module = module.build(ideal)?;
            let got = euler_eigencheck(module.as_ref(), alpha).map_err(|e| e.to_string())?;
            let a = gen_eulerian_exponent(module.as_ref(), alpha).map_err(|e| e.to_string())?;
            expect(got == *eigenvalue && a == 1, format!("eigenvalue {got}, exponent {a}"))
        }
    }
}

/// Checks each expectation against the engine.
pub fn check_expectations(ideal: &MonomialIdeal, expect: &[Expectation]) -> VerificationReport {
    let mut report = VerificationReport::default();
    for e in expect {
        let name = serde_json::to_string(&e.check).expect("checks serialize");
        let property = match e.origin {
            Origin::Reference => "matches a worked example",
            Origin::Derived => "matches an independently derived value",
        };
        report.push(match evaluate(ideal, &e.check) {
            Ok(()) => CheckResult::pass(&name, property),
            Err(why) => CheckResult::fail(&name, property, Witness::new(ideal).detail(why)),
        });
    }
    report
}

/// Modules attached to an ideal: `R` and every nonzero `H^i_I(R)`.
pub fn attached_modules(ideal: &MonomialIdeal) -> Vec<(String, Box<dyn PatternModule>)> {
    let lc = LocalCohomology::new(ideal);
    let mut out: Vec<(String, Box<dyn PatternModule>)> =
        vec![("R".into(), Box::new(LocalizationModule::ring(ideal.context().clone())))];
    for i in 0..=lc.max_index() {
        if lc.contributors(i).is_empty() {
            continue;
        }
        out.push((format!("H^{i}"), Box::new(CechModule::new(ideal, i))));
    }
    out
}

/// Four-term exactness for every degree-1 variable and both operators over
/// `degrees`, plus concentration in one degree when `m = 1`.
pub fn weyl_checks(ideal: &MonomialIdeal, degrees: std::ops::RangeInclusive<i64>) -> VerificationReport {
    let ctx = ideal.context();
    let mut report = VerificationReport::default();
    for (label, module) in attached_modules(ideal) {
        for v in ctx.x_vars() {
            for kind in [HomologyKind::Mult, HomologyKind::Derham] {
                let mut bad = None;
                let mut skipped = 0;
                for n in degrees.clone() {
                    match four_term_check(module.as_ref(), v, kind, n).expect("X variable") {
                        Some(true) => {}
                        Some(false) => {
                            bad.get_or_insert(n);
                        }
                        None => skipped += 1,
                    }
                }
                let name = format!("{label} four-term {kind} {}", ctx.name(v));
                let property = "H_1 - M_source + M_target - H_0 = 0";
                report.push(match bad {
                    Some(n) => CheckResult::fail(&name, property, Witness::new(ideal).degree(n).detail(label.clone())),
                    None if skipped == degrees.clone().count() => CheckResult::skip(
                        &name,
                        property,
                        Witness::new(ideal).detail("infinite dimensions at every probed degree"),
                    ),
                    None => CheckResult::pass(&name, property),
                });
            }
        }
        if ctx.m() == 1 {
            let v = ctx.d();
            let stray = degrees.clone().find(|&n| {
                let x = koszul_homology_x(module.as_ref(), v, n).expect("X variable");
                let dr = derham_homology(module.as_ref(), v, n).expect("X variable");
                (n != 0 && !(x.h1.is_zero() && x.h0.is_zero())) || (n != -1 && !(dr.h1.is_zero() && dr.h0.is_zero()))
            });
            report.push(CheckResult::check(
                &format!("{label} concentration"),
                "Koszul homology lives in degree 0 and de Rham homology in degree -1",
                stray.is_none(),
                || Witness::new(ideal).degree(stray.unwrap_or(0)).detail(label.clone()),
            ));
        }
    }
    report
}

/// Compares the homology operations with their window-oracle versions on
/// small finite cases.
pub fn weyl_oracle_checks(ideal: &MonomialIdeal, degrees: std::ops::RangeInclusive<i64>) -> VerificationReport {
    let ctx = ideal.context();
    let (d, m) = (ctx.d(), ctx.m());
    let lc = LocalCohomology::new(ideal);
    let mut report = VerificationReport::default();
    if ctx.nvars() > 3 {
        return report;
    }
    for i in 0..=lc.max_index() {
        let module = CechModule::new(ideal, i);
        for n in degrees.clone() {
            let bound = n.abs() + m as i64 + 1;
            let as_usize = |v: &DimValue| v.to_u64().map(|x| x as usize);
            if d == 0 {
                for v in ctx.x_vars() {
                    let ours = koszul_homology_x(&module, v, n).expect("X variable");
                    if let (Some(a), Some(b)) = (as_usize(&ours.h1), as_usize(&ours.h0)) {
                        let theirs = window_koszul_x(ideal, i, v, n, bound);
                        report.push(CheckResult::check(
                            &format!("H^{i} Koszul {} at {n} vs oracle", ctx.name(v)),
                            "pattern-wise homology equals windowed homology",
                            (a, b) == theirs,
                            || {
                                Witness::new(ideal)
                                    .index(i)
                                    .degree(n)
                                    .detail(format!("engine {:?}, oracle {theirs:?}", (a, b)))
                            },
                        ));
                    }
                    let ours = derham_homology(&module, v, n).expect("X variable");
                    if let (Some(a), Some(b)) = (as_usize(&ours.h1), as_usize(&ours.h0)) {
                        let theirs = window_derham(ideal, i, v, n, bound);
                        report.push(CheckResult::check(
                            &format!("H^{i} de Rham {} at {n} vs oracle", ctx.name(v)),
                            "pattern-wise homology equals windowed homology",
                            (a, b) == theirs,
                            || {
                                Witness::new(ideal)
                                    .index(i)
                                    .degree(n)
                                    .detail(format!("engine {:?}, oracle {theirs:?}", (a, b)))
                            },
                        ));
                    }
                }
            } else if let Some(ours) = as_usize(&y_socle(&module, n).expect("d >= 1")) {
                let theirs = window_y_socle(ideal, i, n, bound);
                report.push(CheckResult::check(
                    &format!("H^{i} Y-socle at {n} vs oracle"),
                    "corner-only socle equals windowed joint kernel",
                    ours == theirs,
                    || {
                        Witness::new(ideal)
                            .index(i)
                            .degree(n)
                            .detail(format!("engine {ours}, oracle {theirs}"))
                    },
                ));
            }
        }
    }
    report
}

/// Expectations, theorem suite, and Weyl-action checks for one spec.
pub fn run_spec(spec: &IdealSpec, ideal: &MonomialIdeal, options: &SuiteOptions) -> VerificationReport {
    let mut report = check_expectations(ideal, &spec.expect);
    report.extend(theorem_suite(ideal, options));
    report.extend(weyl_checks(ideal, -10..=10));
    report
}

/// Runs every corpus case in order, labelling entries by case id.
pub fn run_corpus(options: &SuiteOptions) -> VerificationReport {
    let mut report = VerificationReport::default();
    for case in golden_corpus() {
        let ideal = case.ideal();
        let mut r = run_spec(&case.spec, &ideal, options);
        r.extend(weyl_oracle_checks(&ideal, -3..=3));
        report.extend(r.with_case(&case.id));
    }
    report
}
