//! The `biq` command-line front end.
//!
//! Exit statuses: 0 success or verification pass, 1 verification fail (or a
//! negative isomorphism answer), 2 input or parse error. All output is
//! byte-deterministic for fixed inputs; the only environment configuration
//! is `BIQ_WIDTH`, which right-pads table entries to the given width.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::io::{Read, Write};

use crate::enumeration::{
    census_crosscheck_with, enumerate_biquandles_bruteforce_with, enumerate_structures_with,
    EnumerationLimits,
};
use crate::error::Error;
use crate::io::{
    betas_from_rows, parse_str, write_biquandle_padded, write_group_padded, write_quandle_padded,
    write_structure_padded, ParsedFile,
};
use crate::morphisms::{
    biquandle_aut_group, biquandle_aut_group_naive, biquandles_isomorphic,
    classify_constant_structures, groups_isomorphic, quandle_aut_group, quandle_aut_group_naive,
    quandles_isomorphic, structures_isomorphic, IsoResult, PermGroup,
};
use crate::products::{biquandle_components, product_biquandle, quandle_components};
use crate::structures::{
    extract_structure, realize, underlying_quandle, verify_structure, BiquandleStructure,
};
use crate::tables::{
    alexander_biquandle, alexander_quandle, conjugation_quandle, core_quandle, dihedral_biquandle,
    dihedral_quandle, trivial_quandle, verify_biquandle, verify_group, verify_quandle,
    wada_biquandle, FiniteBiquandle, FiniteGroup, FiniteQuandle, VerificationReport,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

const USAGE: &str = "\
usage: biq <command> [args] [--manifest]
commands:
  verify <file>                          check axioms; exit 0 pass, 1 fail
  make <family> <params..> [-o FILE]     write a built-in family table
  underlying <biquandle-file> [-o FILE]  quandle underlying a biquandle
  realize <structure-file> [-o FILE]     biquandle of a structure
  extract <biquandle-file> [-o FILE]     structure of a biquandle
  aut <file> [--oracle]                  automorphism group, one permutation per line
  iso <file> <file>                      isomorphism test; exit 0 yes, 1 no
  classify-constant <quandle-file>       constant-structure classes
  structures <quandle-file> [-o DIR]     all structures on a quandle
  product <q-file> <k-file> -o FILE      product biquandle plus .meta sidecar
  components <file>                      connected components, one block per line
  census --order N [-o DIR]              all biquandles of an order
  crosscheck --order N                   census vs structure enumeration
families for make:
  dihedral N | alexander N T | trivial N | conjugation G | core G | wada G
  dihedral-biquandle N S | alexander-biquandle N T S
  cyclic-group N | symmetric-group K     (G: path to a group file)
";

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: format!("error: {e}"),
        }
    }
}

type CliResult<T> = Result<T, Failure>;

struct CommandOutput {
    stdout: String,
    code: i32,
}

impl CommandOutput {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            code: EXIT_PASS,
        }
    }
}

/// Runs one command; returns the process exit code.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let pad = std::env::var("BIQ_WIDTH")
        .ok()
        .and_then(|w| w.parse::<usize>().ok())
        .unwrap_or(0);
    match dispatch(args, pad) {
        Ok(result) => {
            if out.write_all(result.stdout.as_bytes()).is_err() {
                return EXIT_INPUT;
            }
            result.code
        }
        Err(failure) => {
            let _ = writeln!(err, "{}", failure.message);
            failure.code
        }
    }
}

fn dispatch(args: &[String], pad: usize) -> CliResult<CommandOutput> {
    let Some(verb) = args.first() else {
        return Err(Failure {
            code: EXIT_INPUT,
            message: USAGE.trim_end().to_string(),
        });
    };
    let rest = &args[1..];
    match verb.as_str() {
        "verify" => cmd_verify(rest),
        "make" => cmd_make(rest, pad),
        "underlying" => cmd_underlying(rest, pad),
        "realize" => cmd_realize(rest, pad),
        "extract" => cmd_extract(rest, pad),
        "aut" => cmd_aut(rest),
        "iso" => cmd_iso(rest),
        "classify-constant" => cmd_classify_constant(rest),
        "structures" => cmd_structures(rest, pad),
        "product" => cmd_product(rest, pad),
        "components" => cmd_components(rest),
        "census" => cmd_census(rest, pad),
        "crosscheck" => cmd_crosscheck(rest),
        other => Err(Failure {
            code: EXIT_INPUT,
            message: format!("error: unknown command '{other}'"),
        }),
    }
}

// ---- argument plumbing ----------------------------------------------------

struct Opts {
    positionals: Vec<String>,
    values: BTreeMap<String, String>,
    flags: BTreeSet<String>,
}

impl Opts {
    fn parse(rest: &[String], value_keys: &[&str], flag_keys: &[&str]) -> CliResult<Self> {
        let mut positionals = Vec::new();
        let mut values = BTreeMap::new();
        let mut flags = BTreeSet::new();
        let mut iter = rest.iter();
        while let Some(arg) = iter.next() {
            let key = match arg.as_str() {
                "-o" | "--output" => Some("output"),
                s if s.starts_with("--") => Some(&s[2..]),
                _ => None,
            };
            match key {
                None => positionals.push(arg.clone()),
                Some(k) if value_keys.contains(&k) => {
                    let value = iter.next().ok_or_else(|| Failure {
                        code: EXIT_INPUT,
                        message: format!("error: option --{k} needs a value"),
                    })?;
                    values.insert(k.to_string(), value.clone());
                }
                Some(k) if flag_keys.contains(&k) => {
                    flags.insert(k.to_string());
                }
                Some(k) => {
                    return Err(Failure {
                        code: EXIT_INPUT,
                        message: format!("error: unknown option '--{k}'"),
                    })
                }
            }
        }
        Ok(Self {
            positionals,
            values,
            flags,
        })
    }

    fn positional(&self, index: usize, name: &str) -> CliResult<&str> {
        self.positionals
            .get(index)
            .map(String::as_str)
            .ok_or_else(|| Failure {
                code: EXIT_INPUT,
                message: format!("error: missing argument <{name}>"),
            })
    }

    fn usize_positional(&self, index: usize, name: &str) -> CliResult<usize> {
        let raw = self.positional(index, name)?;
        raw.parse().map_err(|_| Failure {
            code: EXIT_INPUT,
            message: format!("error: <{name}> must be a non-negative integer, got '{raw}'"),
        })
    }

    fn value(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    fn usize_value(&self, key: &str) -> CliResult<Option<usize>> {
        match self.value(key) {
            None => Ok(None),
            Some(raw) => raw.parse().map(Some).map_err(|_| Failure {
                code: EXIT_INPUT,
                message: format!("error: --{key} must be a non-negative integer, got '{raw}'"),
            }),
        }
    }

    fn flag(&self, key: &str) -> bool {
        self.flags.contains(key)
    }

    fn manifest(&self) -> bool {
        self.flag("manifest")
    }
}

fn limits_from(opts: &Opts) -> CliResult<EnumerationLimits> {
    let mut limits = EnumerationLimits::default();
    if let Some(v) = opts.usize_value("max-order")? {
        limits.max_order = v;
    }
    if let Some(v) = opts.usize_value("max-aut")? {
        limits.max_aut_order = v;
    }
    if let Some(v) = opts.usize_value("max-bruteforce")? {
        limits.max_bruteforce_order = v;
    }
    Ok(limits)
}

fn input_failure(path: &str, e: &Error) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: format!("error: {path}: {e}"),
    }
}

fn read_input(path: &str) -> CliResult<String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure {
                code: EXIT_INPUT,
                message: format!("error: cannot read standard input: {e}"),
            })?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure {
            code: EXIT_INPUT,
            message: format!("error: cannot read {path}: {e}"),
        })
    }
}

fn parse_input(path: &str) -> CliResult<ParsedFile> {
    let text = read_input(path)?;
    parse_str(&text).map_err(|e| match e {
        Error::Parse { line, col, msg } => Failure {
            code: EXIT_INPUT,
            message: format!("error: {path}:{line}:{col}: {msg}"),
        },
        other => input_failure(path, &other),
    })
}

fn load_quandle(path: &str) -> CliResult<FiniteQuandle> {
    match parse_input(path)? {
        ParsedFile::Quandle(op) => FiniteQuandle::new(op).map_err(|e| input_failure(path, &e)),
        other => Err(wrong_kind(path, "quandle", other.kind())),
    }
}

fn load_biquandle(path: &str) -> CliResult<FiniteBiquandle> {
    match parse_input(path)? {
        ParsedFile::Biquandle(under, over) => {
            FiniteBiquandle::new(under, over).map_err(|e| input_failure(path, &e))
        }
        other => Err(wrong_kind(path, "biquandle", other.kind())),
    }
}

fn load_group(path: &str) -> CliResult<FiniteGroup> {
    match parse_input(path)? {
        ParsedFile::Group(mul) => FiniteGroup::from_table(mul).map_err(|e| input_failure(path, &e)),
        other => Err(wrong_kind(path, "group", other.kind())),
    }
}

fn structure_from_parts(
    path: &str,
    base: crate::tables::OperationTable,
    betas: Vec<Vec<usize>>,
) -> CliResult<BiquandleStructure> {
    let q = FiniteQuandle::new(base).map_err(|e| input_failure(path, &e))?;
    let perms = betas_from_rows(&betas).map_err(|e| input_failure(path, &e))?;
    BiquandleStructure::new(q, perms).map_err(|e| input_failure(path, &e))
}

fn load_structure(path: &str) -> CliResult<BiquandleStructure> {
    match parse_input(path)? {
        ParsedFile::Structure { base, betas } => structure_from_parts(path, base, betas),
        other => Err(wrong_kind(path, "structure", other.kind())),
    }
}

fn wrong_kind(path: &str, expected: &str, actual: &str) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: format!("error: {path}: expected a {expected} file, found '{actual}'"),
    }
}

fn emit_file(opts: &Opts, text: String) -> CliResult<CommandOutput> {
    match opts.value("output") {
        None => Ok(CommandOutput::ok(text)),
        Some(path) => {
            write_file(path, &text)?;
            Ok(CommandOutput::ok(String::new()))
        }
    }
}

fn write_file(path: &str, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|e| Failure {
        code: EXIT_INPUT,
        message: format!("error: cannot write {path}: {e}"),
    })
}

fn manifest_block(pairs: &[(&str, String)]) -> String {
    let mut s = String::from("---\n");
    for (k, v) in pairs {
        let _ = writeln!(s, "{k}={v}");
    }
    s
}

// ---- commands --------------------------------------------------------------

fn cmd_verify(rest: &[String]) -> CliResult<CommandOutput> {
    let opts = Opts::parse(rest, &[], &["manifest"])?;
    let path = opts.positional(0, "file")?;
    let parsed = parse_input(path)?;
    let kind = parsed.kind();
    let report: VerificationReport = match parsed {
        ParsedFile::Quandle(op) => verify_quandle(&op),
        ParsedFile::Group(mul) => verify_group(&mul),
        ParsedFile::Biquandle(under, over) => {
            verify_biquandle(&under, &over).expect("one order per file")
        }
        ParsedFile::Structure { base, betas } => {
            let base_report = verify_quandle(&base);
            if base_report.passed() {
                let q = FiniteQuandle::new(base).expect("base just verified");
                let perms = betas_from_rows(&betas).map_err(|e| input_failure(path, &e))?;
                verify_structure(&q, &perms).expect("shape fixed by the file format")
            } else {
                base_report
            }
        }
    };
    let mut out = String::new();
    if report.passed() {
        let _ = writeln!(out, "{kind}: PASS");
    } else {
        let _ = writeln!(out, "{kind}: FAIL");
        for v in report.violations() {
            let _ = writeln!(out, "violation: {v}");
        }
        if report.truncated() {
            let _ = writeln!(out, "violation list truncated");
        }
    }
    if opts.manifest() {
        out += &manifest_block(&[
            ("kind", kind.to_string()),
            ("pass", report.passed().to_string()),
            ("violations", report.violations().len().to_string()),
        ]);
    }
    Ok(CommandOutput {
        stdout: out,
        code: if report.passed() {
            EXIT_PASS
        } else {
            EXIT_FAIL
        },
    })
}

fn cmd_make(rest: &[String], pad: usize) -> CliResult<CommandOutput> {
    let opts = Opts::parse(rest, &["output"], &["manifest"])?;
    let family = opts.positional(0, "family")?;
    let text = match family {
        "dihedral" => write_quandle_padded(&dihedral_quandle(opts.usize_positional(1, "n")?)?, pad),
        "alexander" => write_quandle_padded(
            &alexander_quandle(
                opts.usize_positional(1, "n")?,
                opts.usize_positional(2, "t")?,
            )?,
            pad,
        ),
        "trivial" => write_quandle_padded(&trivial_quandle(opts.usize_positional(1, "n")?)?, pad),
        "conjugation" => {
            let g = load_group(opts.positional(1, "group-file")?)?;
            write_quandle_padded(&conjugation_quandle(&g), pad)
        }
        "core" => {
            let g = load_group(opts.positional(1, "group-file")?)?;
            write_quandle_padded(&core_quandle(&g), pad)
        }
        "wada" => {
            let g = load_group(opts.positional(1, "group-file")?)?;
            write_biquandle_padded(&wada_biquandle(&g), pad)
        }
        "dihedral-biquandle" => write_biquandle_padded(
            &dihedral_biquandle(
                opts.usize_positional(1, "n")?,
                opts.usize_positional(2, "s")?,
            )?,
            pad,
        ),
        "alexander-biquandle" => write_biquandle_padded(
            &alexander_biquandle(
                opts.usize_positional(1, "n")?,
                opts.usize_positional(2, "t")?,
                opts.usize_positional(3, "s")?,
            )?,
            pad,
        ),
        "cyclic-group" => {
            write_group_padded(&FiniteGroup::cyclic(opts.usize_positional(1, "n")?)?, pad)
        }
        "symmetric-group" => write_group_padded(
            &FiniteGroup::symmetric(opts.usize_positional(1, "k")?)?,
            pad,
        ),
        other => {
            return Err(Failure {
                code: EXIT_INPUT,
                message: format!("error: unknown family '{other}'"),
            })
        }
    };
    emit_file(&opts, text)
}

fn cmd_underlying(rest: &[String], pad: usize) -> CliResult<CommandOutput> {
    let opts = Opts::parse(rest, &["output"], &["manifest"])?;
    let b = load_biquandle(opts.positional(0, "biquandle-file")?)?;
    emit_file(&opts, write_quandle_padded(&underlying_quandle(&b)?, pad))
}

fn cmd_realize(rest: &[String], pad: usize) -> CliResult<CommandOutput> {
    let opts = Opts::parse(rest, &["output"], &["manifest"])?;
    let s = load_structure(opts.positional(0, "structure-file")?)?;
    emit_file(&opts, write_biquandle_padded(&realize(&s)?, pad))
}

fn cmd_extract(rest: &[String], pad: usize) -> CliResult<CommandOutput> {
    let opts = Opts::parse(rest, &["output"], &["manifest"])?;
    let b = load_biquandle(opts.positional(0, "biquandle-file")?)?;
    emit_file(&opts, write_structure_padded(&extract_structure(&b)?, pad))
}

fn cmd_aut(rest: &[String]) -> CliResult<CommandOutput> {
    let opts = Opts::parse(rest, &[], &["manifest", "oracle"])?;
    let path = opts.positional(0, "file")?;
    let oracle = opts.flag("oracle");
    let group: PermGroup = match parse_input(path)? {
        ParsedFile::Quandle(op) => {
            let q = FiniteQuandle::new(op).map_err(|e| input_failure(path, &e))?;
            if oracle {
                quandle_aut_group_naive(&q)
            } else {
                quandle_aut_group(&q)
            }
        }
        ParsedFile::Biquandle(under, over) => {
            let b = FiniteBiquandle::new(under, over).map_err(|e| input_failure(path, &e))?;
            if oracle {
                biquandle_aut_group_naive(&b)
            } else {
                biquandle_aut_group(&b)?
            }
        }
        ParsedFile::Structure { base, betas } => {
            let s = structure_from_parts(path, base, betas)?;
            let b = realize(&s)?;
            if oracle {
                biquandle_aut_group_naive(&b)
            } else {
                biquandle_aut_group(&b)?
            }
        }
        other => {
            return Err(wrong_kind(
                path,
                "quandle, biquandle or structure",
                other.kind(),
            ))
        }
    };
    let mut out = String::new();
    for p in group.elements() {
        let _ = writeln!(out, "{p}");
    }
    if opts.manifest() {
        out += &manifest_block(&[("order", group.order().to_string())]);
    }
    Ok(CommandOutput::ok(out))
}

fn cmd_iso(rest: &[String]) -> CliResult<CommandOutput> {
    let opts = Opts::parse(rest, &[], &["manifest"])?;
    let path1 = opts.positional(0, "file")?;
    let path2 = opts.positional(1, "file")?;
    let left = parse_input(path1)?;
    let right = parse_input(path2)?;
    let result: IsoResult = match (left, right) {
        (ParsedFile::Quandle(a), ParsedFile::Quandle(b)) => {
            let qa = FiniteQuandle::new(a).map_err(|e| input_failure(path1, &e))?;
            let qb = FiniteQuandle::new(b).map_err(|e| input_failure(path2, &e))?;
            quandles_isomorphic(&qa, &qb)
        }
        (ParsedFile::Biquandle(u1, o1), ParsedFile::Biquandle(u2, o2)) => {
            let b1 = FiniteBiquandle::new(u1, o1).map_err(|e| input_failure(path1, &e))?;
            let b2 = FiniteBiquandle::new(u2, o2).map_err(|e| input_failure(path2, &e))?;
            biquandles_isomorphic(&b1, &b2)
        }
        (
            ParsedFile::Structure { base, betas },
            ParsedFile::Structure {
                base: base2,
                betas: betas2,
            },
        ) => {
            let s1 = structure_from_parts(path1, base, betas)?;
            let s2 = structure_from_parts(path2, base2, betas2)?;
            structures_isomorphic(&s1, &s2)
        }
        (ParsedFile::Group(m1), ParsedFile::Group(m2)) => {
            let g1 = FiniteGroup::from_table(m1).map_err(|e| input_failure(path1, &e))?;
            let g2 = FiniteGroup::from_table(m2).map_err(|e| input_failure(path2, &e))?;
            let p1 = PermGroup::from_elements(g1.order(), g1.regular_representation())?;
            let p2 = PermGroup::from_elements(g2.order(), g2.regular_representation())?;
            groups_isomorphic(&p1, &p2)
        }
        (a, b) => {
            return Err(Failure {
                code: EXIT_INPUT,
                message: format!(
                    "error: cannot compare a {} file with a {} file",
                    a.kind(),
                    b.kind()
                ),
            })
        }
    };
    let mut out = String::new();
    if let Some(w) = result.witness() {
        let _ = writeln!(out, "isomorphic: yes");
        let _ = writeln!(out, "witness: {w}");
    } else {
        let _ = writeln!(out, "isomorphic: no");
    }
    if opts.manifest() {
        out += &manifest_block(&[(
            "isomorphic",
            if result.found() { "yes" } else { "no" }.to_string(),
        )]);
    }
    Ok(CommandOutput {
        stdout: out,
        code: if result.found() { EXIT_PASS } else { EXIT_FAIL },
    })
}

fn cmd_classify_constant(rest: &[String]) -> CliResult<CommandOutput> {
    let opts = Opts::parse(rest, &[], &["manifest"])?;
    let q = load_quandle(opts.positional(0, "quandle-file")?)?;
    let classes = classify_constant_structures(&q);
    let mut out = String::new();
    for (i, (rep, size)) in classes.iter().enumerate() {
        let _ = writeln!(out, "class {i}: size={size} rep={rep}");
    }
    if opts.manifest() {
        out += &manifest_block(&[("classes", classes.len().to_string())]);
    }
    Ok(CommandOutput::ok(out))
}

fn cmd_structures(rest: &[String], pad: usize) -> CliResult<CommandOutput> {
    let opts = Opts::parse(
        rest,
        &["output", "max-order", "max-aut", "max-bruteforce"],
        &["manifest"],
    )?;
    let q = load_quandle(opts.positional(0, "quandle-file")?)?;
    let limits = limits_from(&opts)?;
    let census = enumerate_structures_with(&q, &limits)?;
    let mut out = String::new();
    let _ = writeln!(out, "total={}", census.count());
    let _ = writeln!(out, "classes={}", census.class_count());
    for (i, class) in census.classes().iter().enumerate() {
        let rep = &census.all()[class[0]];
        let betas: Vec<String> = rep.betas().iter().map(ToString::to_string).collect();
        let _ = writeln!(
            out,
            "class {i}: size={} rep={}",
            class.len(),
            betas.join(";")
        );
    }
    if let Some(dir) = opts.value("output") {
        write_structure_census_dir(dir, &census, pad)?;
    }
    if opts.manifest() {
        out += &manifest_block(&[
            ("total", census.count().to_string()),
            ("classes", census.class_count().to_string()),
        ]);
    }
    Ok(CommandOutput::ok(out))
}

fn write_structure_census_dir(
    dir: &str,
    census: &crate::enumeration::StructureCensus,
    pad: usize,
) -> CliResult<()> {
    make_dir(dir)?;
    let file_name = |i: usize| format!("structure_{i:04}.txt");
    for (i, s) in census.all().iter().enumerate() {
        write_file(
            &format!("{dir}/{}", file_name(i)),
            &write_structure_padded(s, pad),
        )?;
    }
    let mut manifest = String::new();
    let _ = writeln!(manifest, "kind structures");
    let _ = writeln!(manifest, "order {}", census.base().order());
    let _ = writeln!(manifest, "total {}", census.count());
    let _ = writeln!(manifest, "classes {}", census.class_count());
    for (i, class) in census.classes().iter().enumerate() {
        let _ = writeln!(
            manifest,
            "class {i} size={} rep={}",
            class.len(),
            file_name(class[0])
        );
    }
    for (i, class) in census.classes().iter().enumerate() {
        for &member in class {
            let _ = writeln!(manifest, "member {} class={i}", file_name(member));
        }
    }
    write_file(&format!("{dir}/manifest.txt"), &manifest)
}

fn cmd_product(rest: &[String], pad: usize) -> CliResult<CommandOutput> {
    let opts = Opts::parse(rest, &["output"], &["manifest"])?;
    let q = load_quandle(opts.positional(0, "left-quandle-file")?)?;
    let k = load_quandle(opts.positional(1, "right-quandle-file")?)?;
    let Some(out_path) = opts.value("output") else {
        return Err(Failure {
            code: EXIT_INPUT,
            message: "error: product needs -o <file> for the biquandle output".into(),
        });
    };
    let pb = product_biquandle(&q, &k)?;
    let parts = biquandle_components(pb.biquandle());
    write_file(out_path, &write_biquandle_padded(pb.biquandle(), pad))?;

    let mut sidecar = String::new();
    let _ = writeln!(sidecar, "left-order {}", pb.left_order());
    let _ = writeln!(sidecar, "right-order {}", pb.right_order());
    let _ = writeln!(sidecar, "codec (x,a)->x*{}+a", pb.right_order());
    let _ = writeln!(sidecar, "components {}", parts.block_count());
    for (i, block) in parts.blocks().iter().enumerate() {
        let items: Vec<String> = block.iter().map(ToString::to_string).collect();
        let _ = writeln!(sidecar, "component {i}: {}", items.join(" "));
    }
    write_file(&format!("{out_path}.meta"), &sidecar)?;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "product: order={} components={}",
        pb.order(),
        parts.block_count()
    );
    if opts.manifest() {
        out += &manifest_block(&[
            ("order", pb.order().to_string()),
            ("components", parts.block_count().to_string()),
        ]);
    }
    Ok(CommandOutput::ok(out))
}

fn cmd_components(rest: &[String]) -> CliResult<CommandOutput> {
    let opts = Opts::parse(rest, &[], &["manifest"])?;
    let path = opts.positional(0, "file")?;
    let parts = match parse_input(path)? {
        ParsedFile::Quandle(op) => {
            let q = FiniteQuandle::new(op).map_err(|e| input_failure(path, &e))?;
            quandle_components(&q)
        }
        ParsedFile::Biquandle(under, over) => {
            let b = FiniteBiquandle::new(under, over).map_err(|e| input_failure(path, &e))?;
            biquandle_components(&b)
        }
        other => return Err(wrong_kind(path, "quandle or biquandle", other.kind())),
    };
    let mut out = String::new();
    for block in parts.blocks() {
        let items: Vec<String> = block.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "{}", items.join(" "));
    }
    if opts.manifest() {
        out += &manifest_block(&[("blocks", parts.block_count().to_string())]);
    }
    Ok(CommandOutput::ok(out))
}

fn cmd_census(rest: &[String], pad: usize) -> CliResult<CommandOutput> {
    let opts = Opts::parse(rest, &["output", "order", "max-bruteforce"], &["manifest"])?;
    let Some(order) = opts.usize_value("order")? else {
        return Err(Failure {
            code: EXIT_INPUT,
            message: "error: census needs --order <n>".into(),
        });
    };
    let limits = limits_from(&opts)?;
    let census = enumerate_biquandles_bruteforce_with(order, &limits)?;
    let mut out = String::new();
    let _ = writeln!(out, "count={}", census.count());
    if let Some(dir) = opts.value("output") {
        write_biquandle_census_dir(dir, &census, pad)?;
    }
    if opts.manifest() {
        out += &manifest_block(&[
            ("order", order.to_string()),
            ("count", census.count().to_string()),
        ]);
    }
    Ok(CommandOutput::ok(out))
}

fn write_biquandle_census_dir(
    dir: &str,
    census: &crate::enumeration::BiquandleCensus,
    pad: usize,
) -> CliResult<()> {
    make_dir(dir)?;
    let file_name = |i: usize| format!("biquandle_{i:04}.txt");
    for (i, b) in census.all().iter().enumerate() {
        write_file(
            &format!("{dir}/{}", file_name(i)),
            &write_biquandle_padded(b, pad),
        )?;
    }
    // isomorphism classes over the census, first representative wins
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, b) in census.all().iter().enumerate() {
        match classes
            .iter_mut()
            .find(|c| biquandles_isomorphic(&census.all()[c[0]], b).found())
        {
            Some(class) => class.push(i),
            None => classes.push(vec![i]),
        }
    }
    let mut manifest = String::new();
    let _ = writeln!(manifest, "kind census");
    let _ = writeln!(manifest, "order {}", census.order());
    let _ = writeln!(manifest, "count {}", census.count());
    let _ = writeln!(manifest, "classes {}", classes.len());
    for (i, class) in classes.iter().enumerate() {
        let _ = writeln!(
            manifest,
            "class {i} size={} rep={}",
            class.len(),
            file_name(class[0])
        );
    }
    for (i, class) in classes.iter().enumerate() {
        for &member in class {
            let _ = writeln!(manifest, "member {} class={i}", file_name(member));
        }
    }
    write_file(&format!("{dir}/manifest.txt"), &manifest)
}

fn make_dir(dir: &str) -> CliResult<()> {
    std::fs::create_dir_all(dir).map_err(|e| Failure {
        code: EXIT_INPUT,
        message: format!("error: cannot create {dir}: {e}"),
    })
}

fn cmd_crosscheck(rest: &[String]) -> CliResult<CommandOutput> {
    let opts = Opts::parse(rest, &["order", "max-bruteforce"], &["manifest"])?;
    let Some(order) = opts.usize_value("order")? else {
        return Err(Failure {
            code: EXIT_INPUT,
            message: "error: crosscheck needs --order <n>".into(),
        });
    };
    let limits = limits_from(&opts)?;
    let report = census_crosscheck_with(order, &limits).map_err(|e| match e {
        Error::Internal(msg) => Failure {
            code: EXIT_FAIL,
            message: format!("crosscheck failed: {msg}"),
        },
        other => other.into(),
    })?;
    let mut out = String::new();
    let _ = writeln!(out, "{report}");
    if opts.manifest() {
        out += &manifest_block(&[
            ("order", report.order.to_string()),
            ("census", report.census_count.to_string()),
            ("roundtrip", report.roundtrip_count.to_string()),
            ("quandles", report.underlying_quandle_count.to_string()),
            ("structures", report.structure_total.to_string()),
        ]);
    }
    Ok(CommandOutput::ok(out))
}
