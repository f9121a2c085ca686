use std::io::Write;
use std::process::ExitCode;

use braidrep::braid::{pure_gens, BraidWord};
use braidrep::freegrp::{certify, pair_from_words, remark_distance, QuadraticSurd, DEFAULT_WORD_X, DEFAULT_WORD_Y};
use braidrep::graded::{gr_image, kernel_search, kohno_ranks, to_int_matrix, two_adic_level};
use braidrep::reps::{
    burau, congruence_level, lkb, mu_at, mu_symbolic, rho_at, rho_symbolic, Representation, Rho3Basis, DEFAULT_CAP,
};
use braidrep::symchar::{
    classes, decompose, diag_submodule_character, distinct_basis, rep_character, CharacterVector, MU_ORDER,
    RHO_ORDER,
};
use braidrep::{parse_rational, Error, ExactScalar, IdealSpec, LaurentPoly, Matrix, Rational};
use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(name = "braidrep", version, about = "Exact braid group representations and their invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Matrix of a braid word (or every generator when --word is absent).
    Rep {
        #[arg(value_enum)]
        family: Family,
        #[command(flatten)]
        point: PointArgs,
        /// Whitespace-separated signed generator indices.
        #[arg(long, allow_hyphen_values = true)]
        word: Option<String>,
        #[arg(long, value_enum, default_value_t = Out::Json)]
        out: Out,
        /// Named basis of the 3-dimensional rho_3.
        #[arg(long, value_enum, default_value_t = Basis::Standard)]
        basis: Basis,
    },
    /// Character table at the permutation point, optionally decomposed.
    Char {
        #[arg(long, value_enum)]
        rep: CharRep,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        decompose: bool,
        /// Character of the span of the diagonal labels (mu only).
        #[arg(long)]
        diag_submodule: bool,
    },
    /// Decompose a representation character or an explicit value list.
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, required_unless_present = "values")]
        rep: Option<CharRep>,
        /// Comma-separated values on the classes in `char` order.
        #[arg(long, conflicts_with = "rep", allow_hyphen_values = true)]
        values: Option<String>,
        /// Preference order for coinciding irreducibles.
        #[arg(long, value_enum, default_value_t = CharRep::Mu)]
        order: CharRep,
    },
    /// Check the braid relations and generator inverses.
    Verify {
        #[arg(value_enum)]
        family: Family,
        #[command(flatten)]
        point: PointArgs,
    },
    /// Congruence level of pure generator images (or of one word).
    Congruence {
        #[arg(long, value_enum)]
        rep: CharRep,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: Option<String>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u32,
        /// Center of the ideal in the first variable.
        #[arg(long, value_parser = rational_arg, default_value = "1", allow_hyphen_values = true)]
        alpha: Rational,
        /// Center of the ideal in the second variable (mu only).
        #[arg(long, value_parser = rational_arg, default_value = "1", allow_hyphen_values = true)]
        beta: Rational,
    },
    /// Ping-pong certificate for the pair of rho_n(alpha) images.
    Pingpong {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        alpha: Rational,
        #[arg(long, default_value = DEFAULT_WORD_X, allow_hyphen_values = true)]
        word_x: String,
        #[arg(long, default_value = DEFAULT_WORD_Y, allow_hyphen_values = true)]
        word_y: String,
    },
    /// Mod-2 graded quotients of rho_n(-1).
    Graded {
        #[command(subcommand)]
        action: GradedAction,
    },
    /// Lower central series ranks of the pure braid group.
    Kohno {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        depth: usize,
        /// Report the first index whose rank exceeds this bound.
        #[arg(long)]
        exceed: Option<BigInt>,
    },
}

#[derive(Subcommand)]
enum GradedAction {
    /// Iterated commutators of pure generators, one JSON record per line.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        depth: u32,
        #[arg(long, default_value_t = usize::MAX)]
        budget: usize,
    },
    /// Graded image of a word; pure generators when --word is absent.
    Image {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: Option<String>,
        /// Defaults to the 2-adic congruence level of the matrix.
        #[arg(long)]
        level: Option<u32>,
        #[arg(long, value_enum, default_value_t = Basis::Standard)]
        basis: Basis,
    },
}

#[derive(clap::Args)]
struct PointArgs {
    #[arg(long)]
    n: usize,
    /// First variable (a for rho/mu, t for burau/lkb).
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true, conflicts_with = "symbolic")]
    alpha: Option<Rational>,
    /// Second variable (b for mu, q for lkb).
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true, conflicts_with = "symbolic")]
    beta: Option<Rational>,
    /// Keep the variables symbolic (the default when no point is given).
    #[arg(long)]
    symbolic: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Rho,
    Mu,
    Burau,
    Lkb,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CharRep {
    Rho,
    Mu,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Out {
    Json,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Basis {
    Standard,
    TubaWenzl,
    Perm,
    Graded,
}

impl Basis {
    fn rho3(self) -> Option<Rho3Basis> {
        match self {
            Basis::Standard => None,
            Basis::TubaWenzl => Some(Rho3Basis::TubaWenzl),
            Basis::Perm => Some(Rho3Basis::Permutation),
            Basis::Graded => Some(Rho3Basis::Graded),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Basis::Standard => "standard",
            Basis::TubaWenzl => "tuba-wenzl",
            Basis::Perm => "perm",
            Basis::Graded => "graded",
        }
    }
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::Rho => "rho",
            Family::Mu => "mu",
            Family::Burau => "burau",
            Family::Lkb => "lkb",
        }
    }

    fn variables(self) -> &'static [&'static str] {
        match self {
            Family::Rho => &["a"],
            Family::Mu => &["a", "b"],
            Family::Burau => &["t"],
            Family::Lkb => &["t", "q"],
        }
    }

    fn arity(self) -> usize {
        self.variables().len()
    }
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

enum Failure {
    Usage(clap::Error),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn usage(kind: ErrorKind, msg: impl std::fmt::Display) -> Failure {
    Failure::Usage(Cli::command().error(kind, msg))
}

fn parse_word(n: usize, word: &str) -> Result<BraidWord, Failure> {
    BraidWord::parse(n, word).map_err(|e| usage(ErrorKind::InvalidValue, format!("invalid value {word:?} for '--word': {e}")))
}

enum Built {
    Symbolic(Representation<LaurentPoly>),
    Numeric(Representation<Rational>, Vec<Rational>),
}

fn build(family: Family, p: &PointArgs) -> Result<Built, Failure> {
    let point: Vec<Rational> = p.alpha.iter().chain(p.beta.iter()).cloned().collect();
    if point.is_empty() {
        return Ok(Built::Symbolic(match family {
            Family::Rho => rho_symbolic(p.n)?,
            Family::Mu => mu_symbolic(p.n)?,
            Family::Burau => burau(p.n)?,
            Family::Lkb => lkb(p.n)?,
        }));
    }
    if p.alpha.is_none() || point.len() != family.arity() {
        let flags = if family.arity() == 1 { "--alpha" } else { "--alpha and --beta" };
        return Err(usage(
            ErrorKind::ArgumentConflict,
            format!("{} at a point takes exactly {flags}", family.name()),
        ));
    }
    let rep = match family {
        Family::Rho => rho_at(p.n, &point[0])?,
        Family::Mu => mu_at(p.n, &point[0], &point[1])?,
        Family::Burau => burau(p.n)?.evaluate(&point)?,
        Family::Lkb => lkb(p.n)?.evaluate(&point)?,
    };
    Ok(Built::Numeric(rep, point))
}

fn render<S: ExactScalar>(m: &Matrix<S>, out: Out, names: &[&str]) -> Value {
    match out {
        Out::Json => m.to_json(),
        Out::Latex => Value::String(m.to_latex(names)),
    }
}

fn matrices<S: ExactScalar>(
    rep: &Representation<S>,
    word: Option<&BraidWord>,
    basis: Option<(Rho3Basis, S)>,
) -> Result<Vec<Matrix<S>>, Error> {
    let raw = match word {
        Some(w) => vec![rep.eval_word(w)?],
        None => rep.generators().iter().map(|g| g.matrix.clone()).collect(),
    };
    match basis {
        Some((b, alpha)) => raw.iter().map(|m| b.apply(m, &alpha)).collect(),
        None => Ok(raw),
    }
}

fn cmd_rep(family: Family, point: &PointArgs, word: Option<&str>, out: Out, basis: Basis) -> Result<String, Failure> {
    let rho3 = basis.rho3();
    if rho3.is_some() && (family != Family::Rho || point.n != 3) {
        return Err(usage(ErrorKind::ArgumentConflict, "'--basis' other than standard needs 'rep rho --n 3'"));
    }
    let word = word.map(|w| parse_word(point.n, w)).transpose()?;
    let names = family.variables();
    let built = build(family, point)?;
    let (mats, at): (Vec<Value>, Value) = match &built {
        Built::Symbolic(rep) => {
            let b = rho3.map(|b| (b, LaurentPoly::var(0, 1)));
            let ms = matrices(rep, word.as_ref(), b)?;
            (ms.iter().map(|m| render(m, out, names)).collect(), Value::String("symbolic".into()))
        }
        Built::Numeric(rep, pt) => {
            let b = rho3.map(|b| (b, pt[0].clone()));
            let ms = matrices(rep, word.as_ref(), b)?;
            let at = names
                .iter()
                .zip(pt)
                .map(|(k, v)| (k.to_string(), Value::String(v.to_string())))
                .collect::<Map<_, _>>();
            (ms.iter().map(|m| render(m, out, names)).collect(), Value::Object(at))
        }
    };
    if out == Out::Latex {
        let blocks: Vec<&str> = mats.iter().filter_map(Value::as_str).collect();
        return Ok(blocks.join("\n\n"));
    }
    let mut doc = json!({
        "rep": family.name(),
        "n": point.n,
        "variables": names,
        "point": at,
        "basis": basis.name(),
    });
    match word {
        Some(w) => {
            doc["word"] = w.to_json();
            doc["matrix"] = mats.into_iter().next().expect("one matrix");
        }
        None => doc["generators"] = Value::Array(mats),
    }
    pretty(&doc)
}

fn character(rep: CharRep, n: usize) -> Result<CharacterVector, Error> {
    let one = Rational::one();
    match rep {
        CharRep::Rho => rep_character(&rho_at(n, &one)?),
        CharRep::Mu => rep_character(&mu_at(n, &one, &one)?),
    }
}

fn order(rep: CharRep) -> &'static [braidrep::symchar::Irrep] {
    match rep {
        CharRep::Rho => &RHO_ORDER,
        CharRep::Mu => &MU_ORDER,
    }
}

fn decomposition_json(chi: &CharacterVector, rep: CharRep) -> Result<Value, Error> {
    let basis = distinct_basis(order(rep), chi.n())?;
    let d = decompose(chi, &basis)?;
    Ok(Value::Object(
        d.by_multiplicity()
            .into_iter()
            .map(|(i, m)| (i.name().to_string(), Value::from(m)))
            .collect(),
    ))
}

fn cmd_char(rep: CharRep, n: usize, want_decomposition: bool, diag: bool) -> Result<String, Failure> {
    if diag && rep != CharRep::Mu {
        return Err(usage(ErrorKind::ArgumentConflict, "'--diag-submodule' needs '--rep mu'"));
    }
    let chi = if diag { diag_submodule_character(n)? } else { character(rep, n)? };
    let mut doc = json!({
        "rep": match rep { CharRep::Rho => "rho", CharRep::Mu => "mu" },
        "n": n,
        "submodule": if diag { "diagonal" } else { "full" },
        "character": chi.to_json(),
    });
    if want_decomposition {
        doc["decomposition"] = decomposition_json(&chi, rep)?;
    }
    pretty(&doc)
}

fn cmd_decompose(n: usize, rep: Option<CharRep>, values: Option<&str>, order: CharRep) -> Result<String, Failure> {
    let (chi, order) = match (rep, values) {
        (Some(r), _) => (character(r, n)?, r),
        (None, Some(v)) => {
            let parsed = v
                .split(',')
                .map(|x| x.trim().parse::<i64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| usage(ErrorKind::InvalidValue, format!("invalid value {v:?} for '--values': {e}")))?;
            let expected = classes(n).len();
            if parsed.len() != expected {
                return Err(usage(
                    ErrorKind::InvalidValue,
                    format!("'--values' needs {expected} entries for n = {n}, got {}", parsed.len()),
                ));
            }
            (CharacterVector::from_values(n, &parsed)?, order)
        }
        (None, None) => unreachable!("clap requires --rep or --values"),
    };
    pretty(&json!({
        "n": n,
        "character": chi.to_json(),
        "decomposition": decomposition_json(&chi, order)?,
    }))
}

fn cmd_verify(family: Family, point: &PointArgs) -> Result<String, Failure> {
    let (ok, dim) = match build(family, point)? {
        Built::Symbolic(rep) => (rep.verify_relations(), rep.dim()),
        Built::Numeric(rep, _) => (rep.verify_relations(), rep.dim()),
    };
    let doc = json!({ "rep": family.name(), "n": point.n, "dim": dim, "relations": ok });
    if !ok {
        println!("{}", pretty(&doc)?);
        return Err(Failure::Domain(Error::InvalidArgument(format!(
            "braid relations fail for {} on {} strands",
            family.name(),
            point.n
        ))));
    }
    pretty(&doc)
}

fn cmd_congruence(rep: CharRep, n: usize, word: Option<&str>, cap: u32, alpha: Rational, beta: Rational) -> Result<String, Failure> {
    let (r, ideal, names): (_, _, &[&str]) = match rep {
        CharRep::Rho => (rho_symbolic(n)?, IdealSpec::principal(0, alpha), &["a"]),
        CharRep::Mu => (mu_symbolic(n)?, IdealSpec::pair(alpha, beta), &["a", "b"]),
    };
    let words: Vec<(String, BraidWord)> = match word {
        Some(w) => vec![(w.to_string(), parse_word(n, w)?)],
        None => pure_gens(n).into_iter().map(|((i, j), w)| (format!("B{i}{j}"), w)).collect(),
    };
    let mut records = Vec::new();
    for (label, w) in words {
        let report = congruence_level(&r.eval_word(&w)?, &ideal, cap)?;
        records.push(json!({ "label": label, "word": w.to_json(), "level": report.level }));
    }
    pretty(&json!({
        "rep": match rep { CharRep::Rho => "rho", CharRep::Mu => "mu" },
        "n": n,
        "ideal": ideal.describe(names),
        "cap": cap,
        "levels": records,
    }))
}

fn surd_json(s: &QuadraticSurd) -> Value {
    let one = Rational::one();
    json!({
        "rational": s.rational.to_string(),
        "coeff": s.coeff.to_string(),
        "radicand": s.radicand.to_string(),
        "at_least_one": s.cmp_rational(&one) != std::cmp::Ordering::Less,
        "truncated": s.approx(6),
    })
}

fn cmd_pingpong(n: usize, alpha: &Rational, wx: &str, wy: &str) -> Result<String, Failure> {
    let (wx, wy) = (parse_word(n, wx)?, parse_word(n, wy)?);
    let (x, y) = pair_from_words(n, alpha, &wx, &wy)?;
    let report = certify(&x, &y)?;
    let mut doc = json!({
        "n": n,
        "alpha": alpha.to_string(),
        "word_x": wx.to_json(),
        "word_y": wy.to_json(),
    });
    let body = report.to_json();
    for (k, v) in body.as_object().expect("object") {
        doc[k] = v.clone();
    }
    doc["remark"] = match remark_distance(&x, &y) {
        Ok((d1, d2)) => json!({
            "status": "exploratory",
            "convention": "unit Euclidean representatives, squared distances",
            "|Y v1 - v2|^2": surd_json(&d1),
            "|Y^2 v1 - v2|^2": surd_json(&d2),
        }),
        Err(e) => json!({ "status": "unavailable", "reason": e.to_string() }),
    };
    pretty(&doc)
}

fn cmd_graded(action: GradedAction) -> Result<String, Failure> {
    match action {
        GradedAction::Search { n, depth, budget } => {
            let lines: Vec<String> = kernel_search(n, depth, budget)?
                .iter()
                .map(|c| c.to_json().to_string())
                .collect();
            Ok(lines.join("\n"))
        }
        GradedAction::Image { n, word, level, basis } => {
            let rho3 = basis.rho3();
            if rho3.is_some() && n != 3 {
                return Err(usage(ErrorKind::ArgumentConflict, "'--basis' other than standard needs '--n 3'"));
            }
            let words: Vec<(String, BraidWord)> = match word {
                Some(w) => vec![(w.clone(), parse_word(n, &w)?)],
                None => pure_gens(n).into_iter().map(|((i, j), w)| (format!("B{i}{j}"), w)).collect(),
            };
            let minus_one = -Rational::one();
            let rho = rho_at(n, &minus_one)?;
            let mut records = Vec::new();
            for (label, w) in words {
                let mut m = rho.eval_word(&w)?;
                if let Some(b) = rho3 {
                    m = b.apply(&m, &minus_one)?;
                }
                let m = to_int_matrix(&m)?;
                let i = match level {
                    Some(i) => i,
                    None => two_adic_level(&m, DEFAULT_CAP)?,
                };
                let mut rec = json!({ "label": label, "word": w.to_json() });
                for (k, v) in gr_image(&m, i)?.to_json().as_object().expect("object") {
                    rec[k] = v.clone();
                }
                records.push(rec.to_string());
            }
            Ok(records.join("\n"))
        }
    }
}

fn cmd_kohno(n: usize, depth: usize, exceed: Option<BigInt>) -> Result<String, Failure> {
    let ranks = kohno_ranks(n, depth)?;
    let mut doc = ranks.to_json();
    if let Some(bound) = exceed {
        doc["bound"] = Value::String(bound.to_string());
        doc["first_exceeding"] = ranks.first_exceeding(&bound).map_or(Value::Null, Value::from);
    }
    pretty(&doc)
}

fn pretty(v: &Value) -> Result<String, Failure> {
    Ok(serde_json::to_string_pretty(v).expect("json values serialize"))
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Rep { family, point, word, out, basis } => cmd_rep(family, &point, word.as_deref(), out, basis),
        Command::Char { rep, n, decompose, diag_submodule } => cmd_char(rep, n, decompose, diag_submodule),
        Command::Decompose { n, rep, values, order } => cmd_decompose(n, rep, values.as_deref(), order),
        Command::Verify { family, point } => cmd_verify(family, &point),
        Command::Congruence { rep, n, word, cap, alpha, beta } => cmd_congruence(rep, n, word.as_deref(), cap, alpha, beta),
        Command::Pingpong { n, alpha, word_x, word_y } => cmd_pingpong(n, &alpha, &word_x, &word_y),
        Command::Graded { action } => cmd_graded(action),
        Command::Kohno { n, depth, exceed } => cmd_kohno(n, depth, exceed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            if !out.is_empty() {
                // a closed pipe (e.g. `| head`) is not an error
                let _ = writeln!(std::io::stdout().lock(), "{out}");
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(e)) => e.exit(),
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
