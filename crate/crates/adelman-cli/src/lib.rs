//! Command-line front end: reads diagram files, runs the constructions,
//! prints an exact human-readable report plus one machine-readable JSON
//! line.

use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::json;

use adelman::adel::{Adel, AdelMorphism, AdelObject};
use adelman::audit;
use adelman::category::AdditiveCategory;
use adelman::homology::HomologyFunctor;
use adelman::linalg;
use adelman::zfree::{FreeMorphism, ZFree};
use adelman::zmod::{self, GroupMorphism, PresentedGroup, Zmod};
use adelman::ZMatrix;

/// Exact computations in the Adelman category of free abelian groups.
#[derive(Parser)]
#[command(name = "adelman", version, about)]
pub struct Cli {
    /// Print only the final machine-readable JSON line.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Decide whether two morphisms are equal, printing the homotopy
    /// witness when their difference is zero.
    Equal { f: PathBuf, g: PathBuf },
    /// The kernel of a morphism, by the explicit block formula.
    Kernel {
        f: PathBuf,
        /// Prune zero direct summands from the result.
        #[arg(long)]
        simplify: bool,
    },
    /// The cokernel of a morphism, by the explicit block formula.
    Cokernel {
        f: PathBuf,
        #[arg(long)]
        simplify: bool,
    },
    /// Test for monomorphy and print the witness system solution.
    IsMono { f: PathBuf },
    /// Test for epimorphy and print the witness system solution.
    IsEpi { f: PathBuf },
    /// Test for isomorphy (mono and epi together).
    IsIso { f: PathBuf },
    /// The kernel-cokernel factorisation p * I_f * i = f, with the
    /// induced isomorphism and its inverse, verifying all identities.
    Factorize { f: PathBuf },
    /// Invariant factors of the homology of a diagram under the
    /// embedding into finitely presented abelian groups.
    Homology { a: PathBuf },
    /// Alias of `homology`.
    HatE { a: PathBuf },
    /// The induced morphism of presented groups of a diagram morphism.
    HatEMor { f: PathBuf },
    /// A length-two projective resolution of a diagram.
    Resolve { a: PathBuf },
    /// The dual diagram (or diagram morphism), with transposed matrices.
    Dualize { a: PathBuf },
    /// Smith normal form of a bare matrix.
    Snf { m: PathBuf },
    /// Run the randomized invariant suites and report pass/fail counts.
    Axioms {
        /// Seed, decimal or 0x-prefixed hex; defaults to ADELMAN_SEED or
        /// 0xADE1.
        #[arg(long)]
        seed: Option<String>,
        /// Instance count for every suite (defaults per suite).
        #[arg(long)]
        count: Option<usize>,
    },
}

/// A parsed input file, discriminated by its `kind` field.
#[derive(Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum DiagramFile {
    #[serde(rename = "adel-object")]
    AdelObject { x0: FreeMorphism, x1: FreeMorphism },
    #[serde(rename = "adel-morphism")]
    AdelMorphism {
        source: AdelObjectRepr,
        target: AdelObjectRepr,
        f0: FreeMorphism,
        f1: FreeMorphism,
        f2: FreeMorphism,
    },
    #[serde(rename = "group")]
    Group(PresentedGroup),
    #[serde(rename = "group-morphism")]
    GroupMorphism(GroupMorphism),
}

#[derive(Serialize, Deserialize)]
pub struct AdelObjectRepr {
    pub x0: FreeMorphism,
    pub x1: FreeMorphism,
}

/// The report of one invocation: human-readable lines plus the final
/// JSON value; `failures` drives the exit status of audit runs.
pub struct Output {
    pub text: Vec<String>,
    pub json: serde_json::Value,
    pub failures: usize,
}

impl Output {
    fn new(text: Vec<String>, json: serde_json::Value) -> Self {
        Output {
            text,
            json,
            failures: 0,
        }
    }
}

fn load_file(path: &Path) -> anyhow::Result<DiagramFile> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("cannot parse {}", path.display()))
}

fn validate_object(adel: &Adel<ZFree>, repr: AdelObjectRepr) -> anyhow::Result<AdelObject<ZFree>> {
    Ok(adel.object(repr.x0, repr.x1)?)
}

fn load_adel_object(adel: &Adel<ZFree>, path: &Path) -> anyhow::Result<AdelObject<ZFree>> {
    match load_file(path)? {
        DiagramFile::AdelObject { x0, x1 } => validate_object(adel, AdelObjectRepr { x0, x1 }),
        _ => bail!("{} does not hold an adel-object", path.display()),
    }
}

fn load_adel_morphism(
    adel: &Adel<ZFree>,
    path: &Path,
) -> anyhow::Result<AdelMorphism<ZFree>> {
    match load_file(path)? {
        DiagramFile::AdelMorphism {
            source,
            target,
            f0,
            f1,
            f2,
        } => {
            let source = validate_object(adel, source)?;
            let target = validate_object(adel, target)?;
            Ok(adel.morphism(source, target, f0, f1, f2)?)
        }
        _ => bail!("{} does not hold an adel-morphism", path.display()),
    }
}

fn load_matrix(path: &Path) -> anyhow::Result<ZMatrix> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("cannot parse {}", path.display()))
}

fn object_json(obj: &AdelObject<ZFree>) -> serde_json::Value {
    serde_json::to_value(obj).expect("objects serialize")
}

fn morphism_json(m: &AdelMorphism<ZFree>) -> serde_json::Value {
    serde_json::to_value(m).expect("morphisms serialize")
}

fn describe_object(adel: &Adel<ZFree>, obj: &AdelObject<ZFree>) -> String {
    let [s0, s1, s2] = adel.slots(obj);
    format!(
        "Z^{} --{}--> Z^{} --{}--> Z^{}",
        s0.rank,
        obj.x0().mat(),
        s1.rank,
        obj.x1().mat(),
        s2.rank
    )
}

fn parse_seed(text: &str) -> anyhow::Result<u64> {
    let text = text.trim();
    if let Some(hex) = text.strip_prefix("0x").or_else(|| text.strip_prefix("0X")) {
        u64::from_str_radix(hex, 16).map_err(|e| anyhow!("invalid seed {text:?}: {e}"))
    } else {
        text.parse()
            .map_err(|e| anyhow!("invalid seed {text:?}: {e}"))
    }
}

/// Executes one command; all computation happens here so that tests can
/// drive the CLI without spawning processes.
pub fn run(cli: &Cli) -> anyhow::Result<Output> {
    let adel = Adel::new(ZFree);
    match &cli.command {
        Command::Equal { f, g } => run_equal(&adel, f, g),
        Command::Kernel { f, simplify } => {
            let f = load_adel_morphism(&adel, f)?;
            let k = adel.kernel(&f);
            run_edge(&adel, "kernel", k, *simplify, true)
        }
        Command::Cokernel { f, simplify } => {
            let f = load_adel_morphism(&adel, f)?;
            let c = adel.cokernel(&f);
            run_edge(&adel, "cokernel", c, *simplify, false)
        }
        Command::IsMono { f } => {
            let f = load_adel_morphism(&adel, f)?;
            let witness = adel.mono_witness(&f);
            verdict_output("mono", adel.is_mono(&f), &witness)
        }
        Command::IsEpi { f } => {
            let f = load_adel_morphism(&adel, f)?;
            let witness = adel.epi_witness(&f);
            verdict_output("epi", adel.is_epi(&f), &witness)
        }
        Command::IsIso { f } => {
            let f = load_adel_morphism(&adel, f)?;
            let mono = adel.mono_witness(&f);
            let epi = adel.epi_witness(&f);
            let iso = mono.is_some() && epi.is_some();
            let mut text = vec![format!("iso: {}", if iso { "yes" } else { "no" })];
            text.push(format!("mono: {}", if mono.is_some() { "yes" } else { "no" }));
            text.push(format!("epi: {}", if epi.is_some() { "yes" } else { "no" }));
            Ok(Output::new(
                text,
                json!({
                    "iso": iso,
                    "mono": mono.is_some(),
                    "epi": epi.is_some(),
                    "mono_witness": mono.map(witness_json),
                    "epi_witness": epi.map(witness_json),
                }),
            ))
        }
        Command::Factorize { f } => run_factorize(&adel, f),
        Command::Homology { a } | Command::HatE { a } => run_homology(&adel, a),
        Command::HatEMor { f } => run_hat_e_mor(&adel, f),
        Command::Resolve { a } => run_resolve(&adel, a),
        Command::Dualize { a } => run_dualize(&adel, a),
        Command::Snf { m } => run_snf(m),
        Command::Axioms { seed, count } => run_axioms(seed.as_deref(), *count),
    }
}

fn run_equal(adel: &Adel<ZFree>, f_path: &Path, g_path: &Path) -> anyhow::Result<Output> {
    match (load_file(f_path)?, load_file(g_path)?) {
        (
            DiagramFile::AdelMorphism {
                source,
                target,
                f0,
                f1,
                f2,
            },
            DiagramFile::AdelMorphism {
                source: gs,
                target: gt,
                f0: g0,
                f1: g1,
                f2: g2,
            },
        ) => {
            let f = adel.morphism(
                validate_object(adel, source)?,
                validate_object(adel, target)?,
                f0,
                f1,
                f2,
            )?;
            let g = adel.morphism(
                validate_object(adel, gs)?,
                validate_object(adel, gt)?,
                g0,
                g1,
                g2,
            )?;
            let equal = adel.morphisms_equal(&f, &g)?;
            if equal {
                let witness = adel
                    .is_zero_morphism(&adel.sub(&f, &g))
                    .expect("equal morphisms have a witness");
                Ok(Output::new(
                    vec![
                        "EQUAL".into(),
                        format!("witness s: {}", witness.s.mat()),
                        format!("witness t: {}", witness.t.mat()),
                    ],
                    json!({
                        "equal": true,
                        "witness": {"s": witness.s, "t": witness.t},
                    }),
                ))
            } else {
                Ok(Output::new(
                    vec!["NOT-EQUAL".into()],
                    json!({"equal": false, "witness": null}),
                ))
            }
        }
        (DiagramFile::GroupMorphism(f), DiagramFile::GroupMorphism(g)) => {
            if f.dom() != g.dom() || f.cod() != g.cod() {
                bail!("group morphisms have different presentations");
            }
            let diff = f.mat().sub(g.mat());
            match linalg::solve_left(f.cod().rels(), &diff)? {
                Some(combination) => Ok(Output::new(
                    vec![
                        "EQUAL".into(),
                        format!("difference is the relation combination {combination}"),
                    ],
                    json!({"equal": true, "witness": {"combination": combination}}),
                )),
                None => Ok(Output::new(
                    vec!["NOT-EQUAL".into()],
                    json!({"equal": false, "witness": null}),
                )),
            }
        }
        _ => bail!("equal expects two adel-morphism files or two group-morphism files"),
    }
}

/// Shared output shape of `kernel` and `cokernel`: `edge` is `k(f)` resp.
/// `c(f)`; the interesting object is its source resp. target.
fn run_edge(
    adel: &Adel<ZFree>,
    name: &str,
    edge: AdelMorphism<ZFree>,
    simplify: bool,
    object_is_source: bool,
) -> anyhow::Result<Output> {
    let object = if object_is_source {
        edge.source().clone()
    } else {
        edge.target().clone()
    };
    let mut text = vec![
        format!("{name} object: {}", describe_object(adel, &object)),
        format!(
            "{name} morphism components: {}, {}, {}",
            edge.f0().mat(),
            edge.f1().mat(),
            edge.f2().mat()
        ),
    ];
    let mut payload = json!({
        "object": object_json(&object),
        "morphism": morphism_json(&edge),
    });
    if simplify {
        let (pruned, iso) = adel.simplify(&object);
        text.push(format!("simplified: {}", describe_object(adel, &pruned)));
        payload["simplified"] = json!({
            "object": object_json(&pruned),
            "iso": morphism_json(&iso),
        });
    }
    Ok(Output::new(text, payload))
}

fn witness_json(w: [ZMatrix; 4]) -> serde_json::Value {
    json!({"s": w[0], "t": w[1], "u": w[2], "v": w[3]})
}

fn verdict_output(
    name: &str,
    verdict: bool,
    witness: &Option<[ZMatrix; 4]>,
) -> anyhow::Result<Output> {
    debug_assert_eq!(verdict, witness.is_some());
    let mut text = vec![format!("{name}: {}", if verdict { "yes" } else { "no" })];
    if let Some(w) = witness {
        text.push(format!(
            "witness: s = {}, t = {}, u = {}, v = {}",
            w[0], w[1], w[2], w[3]
        ));
    }
    Ok(Output::new(
        text,
        json!({name: verdict, "witness": witness.clone().map(witness_json)}),
    ))
}

fn run_factorize(adel: &Adel<ZFree>, f_path: &Path) -> anyhow::Result<Output> {
    let f = load_adel_morphism(adel, f_path)?;
    let fac = adel.factorization(&f);
    let composite = adel.compose(&adel.compose(&fac.p, &fac.induced), &fac.i);
    let ok_composite = adel.morphisms_equal(&composite, &f)?;
    let ok_left = adel.morphisms_equal(
        &adel.compose(&fac.induced, &fac.inverse),
        &adel.identity(fac.p.target()),
    )?;
    let ok_right = adel.morphisms_equal(
        &adel.compose(&fac.inverse, &fac.induced),
        &adel.identity(fac.i.source()),
    )?;
    let text = vec![
        format!("coimage: {}", describe_object(adel, fac.p.target())),
        format!("image: {}", describe_object(adel, fac.i.source())),
        format!("p I_f i = f: {}", if ok_composite { "ok" } else { "FAILED" }),
        format!("I_f J_f = 1: {}", if ok_left { "ok" } else { "FAILED" }),
        format!("J_f I_f = 1: {}", if ok_right { "ok" } else { "FAILED" }),
    ];
    Ok(Output::new(
        text,
        json!({
            "p": morphism_json(&fac.p),
            "induced": morphism_json(&fac.induced),
            "i": morphism_json(&fac.i),
            "inverse": morphism_json(&fac.inverse),
            "identities": {
                "composite": ok_composite,
                "left": ok_left,
                "right": ok_right,
            },
        }),
    ))
}

fn run_homology(adel: &Adel<ZFree>, path: &Path) -> anyhow::Result<Output> {
    let obj = match load_file(path)? {
        DiagramFile::AdelObject { x0, x1 } => validate_object(adel, AdelObjectRepr { x0, x1 })?,
        // a bare group is resolved freely first
        DiagramFile::Group(g) => zmod::free_resolution_object(&g),
        _ => bail!("homology expects an adel-object or group file"),
    };
    let h = HomologyFunctor::new(Zmod);
    let group = h.hat_object(&zmod::embedding(), &obj);
    let inv = zmod::invariant_factors(&group);
    Ok(Output::new(
        vec![inv.to_string()],
        json!({
            "group": group,
            "invariant_factors": inv,
            "display": inv.to_string(),
        }),
    ))
}

fn run_hat_e_mor(adel: &Adel<ZFree>, path: &Path) -> anyhow::Result<Output> {
    let f = load_adel_morphism(adel, path)?;
    let h = HomologyFunctor::new(Zmod);
    let m = h.hat_morphism(&zmod::embedding(), &f);
    let dom = zmod::invariant_factors(m.dom());
    let cod = zmod::invariant_factors(m.cod());
    let zero = Zmod.zero_morphism(m.dom(), m.cod());
    let is_zero = Zmod.morphisms_equal(&m, &zero);
    Ok(Output::new(
        vec![
            format!("induced morphism: {} -> {}", dom, cod),
            format!("matrix: {}", m.mat()),
            format!("zero morphism: {}", if is_zero { "yes" } else { "no" }),
        ],
        json!({
            "morphism": m,
            "dom_display": dom.to_string(),
            "cod_display": cod.to_string(),
            "is_zero": is_zero,
        }),
    ))
}

fn run_resolve(adel: &Adel<ZFree>, path: &Path) -> anyhow::Result<Output> {
    let a = load_adel_object(adel, path)?;
    let res = adel.projective_resolution(&a);
    let composite_zero = adel
        .is_zero_morphism(&adel.compose(&res.map, &res.cover))
        .is_some();
    let induced_iso = adel
        .factor_through_cokernel(&res.cover, &res.map)
        .map(|u| adel.is_iso(&u))
        .unwrap_or(false);
    let text = vec![
        format!("P: {}", describe_object(adel, res.map.source())),
        format!("Q: {}", describe_object(adel, res.cover.source())),
        format!("A: {}", describe_object(adel, &a)),
        format!("map composite vanishes: {}", if composite_zero { "ok" } else { "FAILED" }),
        format!("cover is a cokernel of map: {}", if induced_iso { "ok" } else { "FAILED" }),
    ];
    Ok(Output::new(
        text,
        json!({
            "p": object_json(res.map.source()),
            "map": morphism_json(&res.map),
            "q": object_json(res.cover.source()),
            "cover": morphism_json(&res.cover),
            "checks": {"composite_zero": composite_zero, "cover_is_cokernel": induced_iso},
        }),
    ))
}

fn run_dualize(adel: &Adel<ZFree>, path: &Path) -> anyhow::Result<Output> {
    match load_file(path)? {
        DiagramFile::AdelObject { x0, x1 } => {
            let obj = validate_object(adel, AdelObjectRepr { x0, x1 })?;
            let dual = adel.dualize(&obj);
            Ok(Output::new(
                vec![format!("dual: {}", describe_object(adel, &dual))],
                json!({"object": object_json(&dual)}),
            ))
        }
        DiagramFile::AdelMorphism {
            source,
            target,
            f0,
            f1,
            f2,
        } => {
            let f = adel.morphism(
                validate_object(adel, source)?,
                validate_object(adel, target)?,
                f0,
                f1,
                f2,
            )?;
            let dual = adel.dualize_morphism(&f);
            Ok(Output::new(
                vec![format!(
                    "dual morphism: {} -> {}",
                    describe_object(adel, dual.source()),
                    describe_object(adel, dual.target())
                )],
                json!({"morphism": morphism_json(&dual)}),
            ))
        }
        _ => bail!("dualize expects an adel-object or adel-morphism file"),
    }
}

fn run_snf(path: &Path) -> anyhow::Result<Output> {
    let m = load_matrix(path)?;
    let dec = linalg::snf(&m);
    debug_assert_eq!(dec.u.mul(&m).mul(&dec.v), dec.d);
    Ok(Output::new(
        vec![
            format!("d: {}", dec.d),
            format!("u: {}", dec.u),
            format!("v: {}", dec.v),
        ],
        json!({"u": dec.u, "d": dec.d, "v": dec.v}),
    ))
}

fn run_axioms(seed: Option<&str>, count: Option<usize>) -> anyhow::Result<Output> {
    let seed = match seed {
        Some(text) => parse_seed(text)?,
        None => match std::env::var("ADELMAN_SEED") {
            Ok(text) => parse_seed(&text)?,
            Err(_) => audit::DEFAULT_SEED,
        },
    };
    let reports = match count {
        Some(n) => vec![
            audit::linalg_suite(seed, n),
            audit::zfree_suite(seed, n),
            audit::adel_suite(seed, n),
            audit::zmod_suite(seed, n),
            audit::homology_suite(seed, n),
        ],
        None => audit::run_all(seed),
    };
    let mut text = vec![format!("seed: {seed:#x}")];
    let mut failures = 0;
    let mut suites = Vec::new();
    for report in &reports {
        let pass: usize = report.checks.iter().map(|c| c.pass).sum();
        let fail = report.failures();
        failures += fail;
        text.push(format!("{}: {} passed, {} failed", report.name, pass, fail));
        for check in &report.checks {
            if check.fail > 0 {
                text.push(format!(
                    "  FAILED {}: {} pass, {} fail",
                    check.name, check.pass, check.fail
                ));
            }
        }
        suites.push(json!({
            "name": report.name,
            "checks": report
                .checks
                .iter()
                .map(|c| json!({"name": c.name, "pass": c.pass, "fail": c.fail}))
                .collect::<Vec<_>>(),
        }));
    }
    text.push(if failures == 0 {
        "all invariants hold".into()
    } else {
        format!("{failures} failures")
    });
    let mut output = Output::new(
        text,
        json!({"seed": seed, "suites": suites, "failures": failures}),
    );
    output.failures = failures;
    Ok(output)
}
