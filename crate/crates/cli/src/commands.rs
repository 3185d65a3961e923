use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};

use pointfree::campaign::{run_campaign, CampaignSpec, Check};
use pointfree::dot::{poset_dot, specialization_dot};
use pointfree::lattice::{
    parse_lattice, regular_elements, validate_frame, write_lattice, FiniteFrame, LatticeError,
};
use pointfree::realline::{
    lemma1_obstruction, lemma1_term, parse_rational, prop1_forcing, prop2_convergence,
    prop2_witness, ConvergenceCertificate, Coordinate, ForcingVerdict, KRealPair, RationalOpen,
    RealLineError,
};
use pointfree::separation::{
    check_ppt_theorem, describe_conditions, is_subfit, is_symmetric, is_weakly_subfit,
    pseudocomplement_formula_check, SeparationError, SeparationReport,
};
use pointfree::sublocale::{
    all_sublocales, closed_sublocale, open_sublocale, render_set, sc_frame, SublocaleError,
};
use pointfree::topospace::{
    enumerate_topologies, is_symmetric_space, render_points, space_proposition_check,
    td_remark_check, uc_lattice, FiniteSpace, TopoError,
};
use pointfree::Budget;

use crate::output::Output;
use crate::{
    AxiomArg, CampaignArgs, Cli, Command, DotTarget, RealCommand, SpaceCommand, WhichArg,
    EXIT_FAILS, EXIT_HOLDS, EXIT_VIOLATION,
};

pub fn run(cli: &Cli) -> Result<u8> {
    let budget = cli.budget();
    let mut out = Output::new(cli.machine);
    let code = match &cli.command {
        Command::CheckFrame { file } => check_frame(file, &budget, &mut out)?,
        Command::Sublocales { file } => sublocales(file, &budget, &mut out)?,
        Command::Sc { file } => sc(file, &budget, &mut out)?,
        Command::Separation { file, axiom } => separation(file, *axiom, &budget, &mut out)?,
        Command::Realline { command } => realline(command, &mut out)?,
        Command::Spaces { command } => spaces(command, &budget, &mut out)?,
        Command::Campaign(args) => campaign(args, cli.seed, &budget, &mut out)?,
        Command::ExportDot { file, target } => {
            print!("{}", export_dot(file, *target, &budget)?);
            return Ok(EXIT_HOLDS);
        }
    };
    out.print();
    Ok(code)
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn is_input_error(e: &LatticeError) -> bool {
    matches!(
        e,
        LatticeError::Parse { .. }
            | LatticeError::Empty
            | LatticeError::TooLarge { .. }
            | LatticeError::IndexOutOfRange { .. }
            | LatticeError::LabelCount { .. }
    )
}

fn load_frame(path: &Path, budget: &Budget) -> Result<FiniteFrame> {
    let text = read(path)?;
    let poset = parse_lattice(&text, budget).with_context(|| format!("in {}", path.display()))?;
    validate_frame(poset).with_context(|| format!("{} is not a frame", path.display()))
}

fn load_space(path: &Path) -> Result<FiniteSpace> {
    let text = read(path)?;
    FiniteSpace::parse(&text).with_context(|| format!("in {}", path.display()))
}

fn flag(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn check_frame(path: &Path, budget: &Budget, out: &mut Output) -> Result<u8> {
    let text = read(path)?;
    let poset = match parse_lattice(&text, budget) {
        Ok(p) => p,
        Err(e) if is_input_error(&e) => {
            return Err(e).with_context(|| format!("in {}", path.display()))
        }
        Err(e) => {
            out.line(format!("not a frame: {e}"));
            out.record(&[
                ("check", &"check-frame"),
                ("status", &"invalid"),
                ("reason", &e),
            ]);
            return Ok(EXIT_FAILS);
        }
    };
    match validate_frame(poset) {
        Ok(frame) => {
            let regular = regular_elements(&frame);
            out.line(format!("valid frame, {} elements", frame.size()));
            out.line(format!("boolean: {}", flag(frame.is_boolean())));
            out.line(format!("regular elements: {}", render_set(&frame, regular)));
            out.line(write_lattice(frame.poset()).trim_end());
            out.record(&[
                ("check", &"check-frame"),
                ("status", &"valid"),
                ("size", &frame.size()),
                ("boolean", &frame.is_boolean()),
                ("regular", &render_set(&frame, regular)),
            ]);
            Ok(EXIT_HOLDS)
        }
        Err(e) => {
            out.line(format!("not a frame: {e}"));
            out.record(&[
                ("check", &"check-frame"),
                ("status", &"invalid"),
                ("reason", &e),
            ]);
            Ok(EXIT_FAILS)
        }
    }
}

fn sublocale_failure(e: SublocaleError, out: &mut Output) -> Result<u8> {
    match e {
        SublocaleError::TheoremViolation(msg) => {
            out.line(format!("theorem violation: {msg}"));
            out.record(&[("status", &"violation"), ("detail", &msg)]);
            Ok(EXIT_VIOLATION)
        }
        other => bail!(other),
    }
}

fn sublocales(path: &Path, budget: &Budget, out: &mut Output) -> Result<u8> {
    let frame = load_frame(path, budget)?;
    let lattice = match all_sublocales(&frame, budget) {
        Ok(l) => l,
        Err(e) => return sublocale_failure(e, out),
    };
    let closed: Vec<_> = (0..frame.size())
        .map(|a| closed_sublocale(&frame, a).members())
        .collect();
    let open: Vec<_> = (0..frame.size())
        .map(|a| open_sublocale(&frame, a).members())
        .collect();
    out.line(format!("{} sublocales", lattice.len()));
    out.record(&[("check", &"sublocales"), ("count", &lattice.len())]);
    for (i, &s) in lattice.sets().iter().enumerate() {
        let mut tags = Vec::new();
        if let Some(a) = closed.iter().position(|&c| c == s) {
            tags.push(format!("c({})", frame.label(a)));
        }
        if let Some(a) = open.iter().position(|&o| o == s) {
            tags.push(format!("o({})", frame.label(a)));
        }
        let rendered = render_set(&frame, s);
        out.line(
            format!("  {rendered} {}", tags.join(" "))
                .trim_end()
                .to_string(),
        );
        out.record(&[
            ("sublocale", &i),
            ("members", &rendered),
            ("tags", &tags.join(",")),
        ]);
    }
    Ok(EXIT_HOLDS)
}

fn sc(path: &Path, budget: &Budget, out: &mut Output) -> Result<u8> {
    let frame = load_frame(path, budget)?;
    let sc = match sc_frame(&frame) {
        Ok(sc) => sc,
        Err(e) => return sublocale_failure(e, out),
    };
    let f = sc.frame();
    out.line(format!(
        "S_c(L): {} elements, chain: {}, boolean: {}",
        sc.len(),
        flag(f.poset().is_chain()),
        flag(f.is_boolean())
    ));
    out.record(&[
        ("check", &"sc"),
        ("size", &sc.len()),
        ("chain", &f.poset().is_chain()),
        ("boolean", &f.is_boolean()),
    ]);
    for i in 0..sc.len() {
        out.line(format!("  {}", sc.render(i)));
        out.record(&[("element", &i), ("members", &sc.render(i))]);
    }
    Ok(EXIT_HOLDS)
}

fn separation_failure(e: SeparationError, out: &mut Output) -> Result<u8> {
    if e.is_violation() {
        out.line(format!("{e}"));
        out.record(&[("status", &"violation"), ("detail", &e)]);
        Ok(EXIT_VIOLATION)
    } else {
        bail!(e)
    }
}

fn axiom_report(frame: &FiniteFrame, r: &SeparationReport, out: &mut Output) -> u8 {
    let witness = r.witness.map(|w| w.render(frame)).unwrap_or_default();
    match r.witness {
        Some(_) => out.line(format!("{}: fails, witness {witness}", r.axiom.name())),
        None => out.line(format!("{}: holds", r.axiom.name())),
    }
    if !r.conditions.is_empty() {
        for c in &r.conditions {
            let w = c
                .witness
                .map(|w| format!(" [{}]", w.render(frame)))
                .unwrap_or_default();
            out.line(format!("  {}: {}{w}", c.name, c.holds));
        }
    }
    let name = r.axiom.name();
    let mut fields: Vec<(&str, &dyn std::fmt::Display)> = vec![
        ("axiom", &name),
        ("verdict", &r.verdict),
        ("witness", &witness),
    ];
    let conds = describe_conditions(frame, &r.conditions);
    if !r.conditions.is_empty() {
        fields.push(("conditions", &conds));
    }
    out.record(&fields);
    if r.holds() {
        EXIT_HOLDS
    } else {
        EXIT_FAILS
    }
}

fn separation(path: &Path, axiom: AxiomArg, budget: &Budget, out: &mut Output) -> Result<u8> {
    let frame = load_frame(path, budget)?;
    match axiom {
        AxiomArg::Subfit => Ok(axiom_report(&frame, &is_subfit(&frame), out)),
        AxiomArg::Weak => Ok(axiom_report(&frame, &is_weakly_subfit(&frame), out)),
        AxiomArg::Symmetric => match is_symmetric(&frame) {
            Ok(r) => Ok(axiom_report(&frame, &r, out)),
            Err(e) => separation_failure(e, out),
        },
        AxiomArg::Ppt => match check_ppt_theorem(&frame, budget) {
            Ok(r) => {
                out.line(format!("subfit: {}", flag(r.subfit.holds())));
                out.line(format!("S_c(L)^op boolean: {}", flag(r.sc_boolean)));
                out.line(format!(
                    "S_c(L) = Booleanization of S(L)^op: {}",
                    flag(r.coincides)
                ));
                if let Some(w) = r.subfit.witness {
                    out.line(format!("subfit witness: {}", w.render(&frame)));
                }
                if let Some(s) = r.sc_uncomplemented {
                    out.line(format!(
                        "uncomplemented in S_c(L): {}",
                        render_set(&frame, s)
                    ));
                }
                out.line("consistent");
                out.record(&[
                    ("axiom", &"ppt"),
                    ("subfit", &r.subfit.holds()),
                    ("sc_boolean", &r.sc_boolean),
                    ("coincides", &r.coincides),
                    ("status", &"consistent"),
                ]);
                Ok(EXIT_HOLDS)
            }
            Err(e) => separation_failure(e, out),
        },
        AxiomArg::Pcformula => {
            let r = pseudocomplement_formula_check(&frame);
            let status = match (&r.violation, r.applicable) {
                (Some(_), _) => "violation",
                (None, true) => "holds",
                (None, false) => "n/a",
            };
            match (&r.violation, r.applicable) {
                (Some(v), _) => out.line(format!("violation: {v}")),
                (None, true) => {
                    out.line("a* = meet{x : x ∨ a = 1} holds for every a");
                    out.line(format!(
                        "a ∨ a* = 1: {}, boolean: {}",
                        flag(r.complemented),
                        flag(r.boolean)
                    ));
                }
                (None, false) => out.line("not weakly subfit: formula check not applicable"),
            }
            out.record(&[
                ("axiom", &"pcformula"),
                ("status", &status),
                ("complemented", &r.complemented),
                ("boolean", &r.boolean),
            ]);
            Ok(if r.violation.is_some() {
                EXIT_VIOLATION
            } else {
                EXIT_HOLDS
            })
        }
    }
}

fn real_failure(e: RealLineError, out: &mut Output) -> Result<u8> {
    match e {
        RealLineError::Parse(_) | RealLineError::EmptyInterval { .. } => bail!(e),
        RealLineError::TheoremViolation(_) => {
            out.line(format!("{e}"));
            out.record(&[("status", &"violation"), ("detail", &e)]);
            Ok(EXIT_VIOLATION)
        }
        other => {
            out.line(format!("{other}"));
            out.record(&[("status", &"fails"), ("reason", &other)]);
            Ok(EXIT_FAILS)
        }
    }
}

fn parse_open(s: &str) -> Result<RationalOpen> {
    s.parse::<RationalOpen>()
        .with_context(|| format!("invalid interval set `{s}`"))
}

fn realline(cmd: &RealCommand, out: &mut Output) -> Result<u8> {
    match cmd {
        RealCommand::Lemma1 { set, n } => {
            let u = parse_open(set)?;
            match lemma1_term(&u, *n) {
                Ok(t) => {
                    out.line(t.to_string());
                    out.record(&[("set", &u), ("n", n), ("term", &t)]);
                    Ok(EXIT_HOLDS)
                }
                Err(e) => real_failure(e, out),
            }
        }
        RealCommand::Obstruct { set, x } => {
            let u = parse_open(set)?;
            let x = parse_rational(x)?;
            match lemma1_obstruction(&u, &x) {
                Ok(c) => {
                    out.line(format!("N = {}", c.n));
                    out.line(format!("term {} = {}", c.n, c.term));
                    out.line(format!(
                        "{} excluded: {}",
                        c.x,
                        flag(!c.term.contains(&c.x))
                    ));
                    out.record(&[
                        ("set", &u),
                        ("x", &x),
                        ("n", &c.n),
                        ("term", &c.term),
                        ("verified", &c.verify(&u)),
                    ]);
                    Ok(EXIT_HOLDS)
                }
                Err(e) => real_failure(e, out),
            }
        }
        RealCommand::Prop2 { u, v, n, x, which } => {
            let pair = match KRealPair::new(parse_open(u)?, parse_open(v)?) {
                Ok(p) => p,
                Err(e) => return real_failure(e, out),
            };
            if let Some(x) = x {
                let x = parse_rational(x)?;
                let which = match which {
                    WhichArg::First => Coordinate::First,
                    WhichArg::Second => Coordinate::Second,
                };
                return match prop2_convergence(&pair, &x, which) {
                    Ok(ConvergenceCertificate::Excluded { n, stage, .. }) => {
                        out.line(format!("N = {n}: {x} ∉ {stage}"));
                        out.record(&[("certificate", &"excluded"), ("n", &n), ("stage", &stage)]);
                        Ok(EXIT_HOLDS)
                    }
                    Ok(ConvergenceCertificate::PointBoundary {
                        checked_up_to,
                        limit,
                    }) => {
                        out.line(format!(
                            "0 ∈ V_n for n ≤ {checked_up_to}; Boolean meet of the V_n is {limit}"
                        ));
                        out.record(&[
                            ("certificate", &"boundary"),
                            ("checked_up_to", &checked_up_to),
                            ("limit", &limit),
                        ]);
                        Ok(EXIT_HOLDS)
                    }
                    Err(e) => real_failure(e, out),
                };
            }
            match prop2_witness(&pair, *n) {
                Ok(w) => {
                    out.line(format!("U_{n} = {}", w.first()));
                    out.line(format!("V_{n} = {}", w.second()));
                    out.record(&[("n", n), ("u_n", w.first()), ("v_n", w.second())]);
                    Ok(EXIT_HOLDS)
                }
                Err(e) => real_failure(e, out),
            }
        }
        RealCommand::Prop1 { u, v, n } => {
            let pair = match KRealPair::new(parse_open(u)?, parse_open(v)?) {
                Ok(p) => p,
                Err(e) => return real_failure(e, out),
            };
            match prop1_forcing(&pair, *n) {
                Ok(verdict) => {
                    let name = match verdict {
                        ForcingVerdict::Forced => "forced",
                        ForcingVerdict::NotForced => "not-forced",
                    };
                    out.line(name);
                    out.record(&[("n", n), ("verdict", &name)]);
                    Ok(EXIT_HOLDS)
                }
                Err(e) => real_failure(e, out),
            }
        }
    }
}

fn topo_failure(e: TopoError, out: &mut Output) -> Result<u8> {
    if e.is_violation() {
        out.line(format!("{e}"));
        out.record(&[("status", &"violation"), ("detail", &e)]);
        Ok(EXIT_VIOLATION)
    } else {
        bail!(e)
    }
}

fn spaces(cmd: &SpaceCommand, budget: &Budget, out: &mut Output) -> Result<u8> {
    match cmd {
        SpaceCommand::Check { file } => {
            let space = load_space(file)?;
            let (symmetric, pair) = is_symmetric_space(&space);
            let uc = match uc_lattice(&space, budget) {
                Ok(uc) => uc,
                Err(e) => return topo_failure(e, out),
            };
            let report = match space_proposition_check(&space, budget) {
                Ok(r) => r,
                Err(e) => return topo_failure(e, out),
            };
            out.line(format!(
                "points: {}, opens: {}",
                space.points(),
                space.opens().len()
            ));
            match pair {
                Some((x, y)) => out.line(format!("symmetric: no ({x} ≤ {y}, {y} ≰ {x})")),
                None => out.line("symmetric: yes"),
            }
            let ucs: Vec<String> = uc.elements().iter().map(|s| render_points(*s)).collect();
            out.line(format!("U_c(X): {}", ucs.join(" ")));
            for c in &report.conditions {
                let w = c
                    .witness
                    .as_ref()
                    .map(|w| format!(" [{w}]"))
                    .unwrap_or_default();
                out.line(format!("  {}: {}{w}", c.name, c.holds));
            }
            out.record(&[
                ("points", &space.points()),
                ("symmetric", &symmetric),
                ("t0", &space.is_t0()),
                ("uc_size", &uc.len()),
                ("conditions", &report.describe()),
            ]);
            if space.is_t0() {
                match td_remark_check(&space) {
                    Ok(r) => {
                        out.line(format!(
                            "locale symmetric: {}, space symmetric: {}",
                            flag(r.locale_symmetric),
                            flag(r.space_symmetric)
                        ));
                        out.record(&[
                            ("td_remark", &"agree"),
                            ("locale_symmetric", &r.locale_symmetric),
                        ]);
                    }
                    Err(e) => return topo_failure(e, out),
                }
            }
            Ok(if report.holds() {
                EXIT_HOLDS
            } else {
                EXIT_FAILS
            })
        }
        SpaceCommand::Enumerate { n, t0, report } => {
            let all = enumerate_topologies(*n, *t0, budget)?;
            out.line(format!(
                "{} topologies on {n} points{}",
                all.len(),
                if *t0 { " (T0)" } else { "" }
            ));
            out.record(&[("points", n), ("t0_only", t0), ("count", &all.len())]);
            if *report {
                let mut symmetric = 0;
                for (k, s) in all.iter().enumerate() {
                    let r = match space_proposition_check(s, budget) {
                        Ok(r) => r,
                        Err(e) => return topo_failure(e, out),
                    };
                    if s.is_t0() {
                        if let Err(e) = td_remark_check(s) {
                            return topo_failure(e, out);
                        }
                    }
                    symmetric += usize::from(r.holds());
                    let opens: Vec<String> = s.opens().iter().map(|o| render_points(*o)).collect();
                    out.record(&[
                        ("space", &k),
                        ("opens", &opens.join(";")),
                        ("symmetric", &r.holds()),
                    ]);
                }
                out.line(format!("all conditions agree; {symmetric} symmetric"));
                out.record(&[("agree", &true), ("symmetric", &symmetric)]);
            }
            Ok(EXIT_HOLDS)
        }
    }
}

fn campaign(args: &CampaignArgs, seed: u64, budget: &Budget, out: &mut Output) -> Result<u8> {
    let mut spec = CampaignSpec {
        seed,
        max_lattice_size: args.max_size,
        curated: !args.no_curated,
        all_labelings: !args.no_labelings,
        max_points: args.points,
        random_spaces: args.random_spaces,
        interval_sets: args.intervals,
        interval_pairs: args.pairs,
        ..CampaignSpec::default()
    };
    if !args.checks.is_empty() {
        let checks = args
            .checks
            .iter()
            .map(|c| c.parse::<Check>())
            .collect::<Result<Vec<_>, _>>()?;
        spec = spec.with_checks(&checks);
    }
    let budget = Budget {
        max_points: budget.max_points.max(args.points),
        ..budget.clone()
    };
    let report = run_campaign(&spec, &budget)?;
    if out.machine {
        print!("{}", report.machine());
    } else {
        print!("{}", report.human());
    }
    Ok(report.exit_code() as u8)
}

fn export_dot(path: &Path, target: DotTarget, budget: &Budget) -> Result<String> {
    let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or("input");
    match target {
        DotTarget::Specialization => Ok(specialization_dot(name, &load_space(path)?)),
        DotTarget::Hasse => Ok(poset_dot(name, load_frame(path, budget)?.poset())),
        DotTarget::Sublocales => {
            let frame = load_frame(path, budget)?;
            let lattice = all_sublocales(&frame, budget)?;
            Ok(poset_dot(name, &lattice.to_poset()?))
        }
        DotTarget::Sc => {
            let frame = load_frame(path, budget)?;
            let sc = sc_frame(&frame)?;
            Ok(poset_dot(name, sc.frame().poset()))
        }
    }
}
