//! The `plueckerdec` command line.
//!
//! Every subcommand delegates to one library operation and prints either
//! plain text (the default, pipeable) or JSON. Exit codes: 0 on success,
//! 1 on a domain error (JSON `{"module", "error"}` on stderr), 2 on a usage
//! error.
//!
//! Matrices are read from `--received`/`--matrix` inline, from `--input`, or
//! from stdin, in any of these forms:
//!
//! ```text
//! 1 0 1 0;0 0 0 1          rows split on ';' or newlines
//! [[1,0,1,0],[0,0,0,1]]    JSON rows
//! {"lifted_basis": [...]}  JSON object, keys: matrix, mat, basis,
//!                          lifted_basis, codeword_matrix, received
//! ```

use crate::channel::simulate;
use crate::error::{Error, Result};
use crate::gabidulin::{lift, lift_matrix, CodeParams, GabidulinCode};
use crate::gf::{ExtElement, ExtFieldCtx, FieldCtx};
use crate::listdec::{build_block_code, extended_parity, DecodeOptions, ListDecoder, Strategy};
use crate::matgf::MatGF;
use crate::pluecker::{
    ball_equations, ball_forbidden_tuples, bound_tuple, construction4, embed, full_pluecker_relations,
    shuffle_relations, tau_count,
};
use crate::subspace::Subspace;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::io::{Read, Write};

/// Environment variable capping the decoder's worker threads.
pub const THREADS_ENV: &str = "PLUECKERDEC_THREADS";

const ELEMENT_HELP: &str = "Field elements: `[c0,c1,...]` (coefficients of 1, alpha, ...) or sums such as \
`alpha^2+alpha+1`, `2*alpha-1`.

  element := '[' int (',' int)* ']' | sum
  sum     := ['-'] term (('+' | '-') term)*
  term    := int | [int ['*']] 'alpha' ['^' int]

Matrices: `1 0 1;0 1 1` inline, a JSON array of rows, or a JSON object with a
`matrix`/`basis`/`lifted_basis` key, via flag, --input FILE or stdin.";

#[derive(Debug, Parser)]
#[command(name = "plueckerdec", version, about = "List decoding of lifted Gabidulin codes in Plücker coordinates", after_help = ELEMENT_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Paper,
    Reduced,
    Oracle,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Paper => Strategy::Paper,
            StrategyArg::Reduced => Strategy::Reduced,
            StrategyArg::Oracle => Strategy::Oracle,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct CodeArgs {
    #[arg(long)]
    pub q: u32,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub delta: usize,
    /// Monic modulus of degree n−k, coefficients low degree first, e.g. `1,1,1`.
    #[arg(long)]
    pub modulus: Option<String>,
    /// The k elements g_i, comma separated, e.g. `alpha,1`.
    #[arg(long)]
    pub g: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct MatrixInput {
    /// Inline matrix; otherwise --input or stdin.
    #[arg(long, visible_alias = "matrix")]
    pub received: Option<String>,
    #[arg(long)]
    pub input: Option<std::path::PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generator matrix and the full codeword table.
    Code {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, default_value_t = 1 << 12)]
        cap: u64,
    },
    /// Encode a message (or a message index) to a k × (n−k) matrix.
    Encode {
        #[command(flatten)]
        code: CodeArgs,
        /// k−δ+1 elements, comma separated.
        #[arg(long, conflicts_with = "index")]
        msg: Option<String>,
        #[arg(long)]
        index: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Lift A to the row space of [I | A].
    Lift {
        #[arg(long)]
        q: u32,
        #[command(flatten)]
        input: MatrixInput,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Plücker coordinates of a row space.
    Embed {
        #[arg(long)]
        q: u32,
        #[command(flatten)]
        input: MatrixInput,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Shuffle relations of G_q(k, n).
    Shuffle {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// All exchange relations instead of one per 2k-subset.
        #[arg(long)]
        full: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Linear equations of the ball B_{2e}(R).
    Ball {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        e: usize,
        #[command(flatten)]
        input: MatrixInput,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The block code C^p, its parity check and the padded parity forms.
    Blockcode {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List-decode a received space.
    Decode {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        input: MatrixInput,
        #[arg(long)]
        e: usize,
        #[arg(long, value_enum, default_value = "paper")]
        strategy: StrategyArg,
        #[arg(long, default_value_t = crate::listdec::DEFAULT_COSET_CAP)]
        cap: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Corrupt-then-decode trials, one record per line.
    Simulate {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "paper")]
        strategy: StrategyArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

/// Splits on commas outside brackets.
pub fn split_list(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur).trim().to_string());
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    if !cur.trim().is_empty() || !out.is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

fn parse_u32_list(s: &str) -> Result<Vec<u32>> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']');
    s.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad coefficient `{t}`"))))
        .collect()
}

impl CodeArgs {
    pub fn build(&self) -> Result<GabidulinCode> {
        let mut params = CodeParams::new(self.q, self.n, self.k, self.delta);
        params.modulus = self.modulus.as_deref().map(parse_u32_list).transpose()?;
        let code = params.build()?;
        let Some(g) = &self.g else {
            return Ok(code);
        };
        let ext = code.ext().clone();
        let g = split_list(g)
            .iter()
            .map(|t| ext.parse_element(t))
            .collect::<Result<Vec<_>>>()?;
        GabidulinCode::new(ext, self.k, self.delta, Some(g))
    }
}

const MATRIX_KEYS: [&str; 6] = ["matrix", "mat", "basis", "lifted_basis", "codeword_matrix", "received"];

/// Parses any of the accepted matrix forms.
pub fn parse_matrix(field: FieldCtx, s: &str) -> Result<MatGF> {
    let t = s.trim();
    if t.starts_with('[') || t.starts_with('{') {
        let v: Value = serde_json::from_str(t).map_err(|e| Error::Parse(format!("matrix JSON: {e}")))?;
        let rows = match &v {
            Value::Object(map) => MATRIX_KEYS
                .iter()
                .find_map(|k| map.get(*k))
                .ok_or_else(|| Error::Parse(format!("JSON object needs one of {MATRIX_KEYS:?}")))?,
            _ => &v,
        };
        return MatGF::from_json(field, rows);
    }
    MatGF::parse_text(field, t)
}

impl MatrixInput {
    fn read(&self, field: FieldCtx, stdin: &mut dyn Read) -> Result<MatGF> {
        let text = match (&self.received, &self.input) {
            (Some(s), _) => s.clone(),
            (None, Some(p)) => std::fs::read_to_string(p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?,
            (None, None) => {
                let mut s = String::new();
                stdin
                    .read_to_string(&mut s)
                    .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
                s
            }
        };
        parse_matrix(field, &text)
    }

    fn read_subspace(&self, field: FieldCtx, stdin: &mut dyn Read) -> Result<Subspace> {
        let m = self.read(field, stdin)?;
        let rank = m.rank();
        if rank != m.rows() {
            return Err(Error::Shape(format!("{} generators span only a {rank}-space", m.rows())));
        }
        Ok(Subspace::row_space(&m))
    }
}

/// `1 0;0 1`, the inline matrix form.
pub fn inline(m: &MatGF) -> String {
    m.row_vecs()
        .iter()
        .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(";")
}

fn vector_text(ext: &ExtFieldCtx, v: &[ExtElement]) -> String {
    format!("({})", v.iter().map(|e| ext.display(e)).collect::<Vec<_>>().join(","))
}

fn elements_json(ext: &ExtFieldCtx, v: &[ExtElement]) -> Value {
    Value::from(v.iter().map(|e| ext.display(e)).collect::<Vec<_>>())
}

fn emit(out: &mut dyn Write, s: &str) -> Result<()> {
    out.write_all(s.as_bytes())
        .map_err(|e| Error::Parse(format!("write failed: {e}")))
}

fn emit_json(out: &mut dyn Write, v: &Value) -> Result<()> {
    emit(out, &format!("{}\n", serde_json::to_string(v).expect("serializable")))
}

fn cmd_code(code: &GabidulinCode, format: Format, cap: u64, out: &mut dyn Write) -> Result<()> {
    let ext = code.ext();
    let words: Vec<_> = code.enumerate_code(cap)?.collect();
    let gen = code.generator_matrix();
    match format {
        Format::Json => {
            let list: Vec<Value> = words
                .iter()
                .map(|w| {
                    let u = lift(w);
                    json!({
                        "vector": elements_json(ext, &w.vec),
                        "matrix": w.mat.to_json(),
                        "lifted_basis": u.basis().to_json(),
                        "pluecker": embed(&u).coords,
                    })
                })
                .collect();
            emit_json(
                out,
                &json!({
                    "q": code.field().q(), "n": code.n(), "k": code.k(), "ell": code.ell(),
                    "delta": code.delta(), "rho": code.rho(), "size": code.size() as u64,
                    "modulus": ext.modulus(),
                    "g": elements_json(ext, code.g()),
                    "generator": gen.iter().map(|r| elements_json(ext, r)).collect::<Vec<_>>(),
                    "codewords": list,
                }),
            )
        }
        Format::Text => {
            let mut s = format!(
                "q={} n={} k={} l={} delta={} rho={} size={}\n",
                code.field().q(),
                code.n(),
                code.k(),
                code.ell(),
                code.delta(),
                code.rho(),
                code.size()
            );
            s += &format!("modulus: {:?}\n", ext.modulus());
            s += &format!("g: {}\n", vector_text(ext, code.g()));
            s += "generator:\n";
            for r in &gen {
                s += &format!("  {}\n", vector_text(ext, r));
            }
            s += "codeword | matrix | lifting | pluecker\n";
            for w in &words {
                let u = lift(w);
                s += &format!(
                    "{} | {} | {} | {}\n",
                    vector_text(ext, &w.vec),
                    inline(&w.mat),
                    inline(u.basis()),
                    embed(&u)
                );
            }
            emit(out, &s)
        }
    }
}

fn cmd_decode(
    code: GabidulinCode,
    r: &Subspace,
    e: usize,
    strategy: Strategy,
    cap: u64,
    format: Format,
    out: &mut dyn Write,
) -> Result<()> {
    let dec = ListDecoder::with_options(
        code,
        DecodeOptions {
            strategy,
            coset_cap: cap,
            ..DecodeOptions::default()
        },
    );
    let sys = dec.assemble(r, e)?;
    let outcome = dec.decode(r, e)?;
    let ext = dec.code().ext();
    let st = outcome.stats;
    match format {
        Format::Json => {
            let list: Vec<Value> = outcome
                .list
                .entries
                .iter()
                .map(|en| {
                    json!({
                        "message": elements_json(ext, &en.message),
                        "codeword_matrix": en.codeword.mat.to_json(),
                        "lifted_basis": en.subspace.basis().to_json(),
                        "pluecker": en.pluecker.coords,
                    })
                })
                .collect();
            emit_json(
                out,
                &json!({
                    "received": r.basis().to_json(),
                    "e": e,
                    "strategy": strategy.name(),
                    "list": list,
                    "stats": {
                        "linear_eqs": st.linear_eqs,
                        "quadratic_eqs": st.quadratic_eqs,
                        "vars": st.vars,
                        "candidates_enumerated": st.candidates_enumerated,
                        "elapsed_ms": st.elapsed_ms as u64,
                    },
                }),
            )
        }
        Format::Text => {
            let mut s = format!("received: {}\ne: {e}\nstrategy: {}\n", inline(r.basis()), strategy.name());
            s += &format!(
                "system: {} linear, {} quadratic, {} variables\n",
                st.linear_eqs, st.quadratic_eqs, st.vars
            );
            s += &sys.to_string();
            s += &format!("candidates: {}\n", st.candidates_enumerated);
            s += &format!("list: {}\n", outcome.list.len());
            for en in &outcome.list.entries {
                s += &format!(
                    "{} | {} | {} | {}\n",
                    vector_text(ext, &en.codeword.vec),
                    inline(&en.codeword.mat),
                    inline(en.subspace.basis()),
                    en.pluecker
                );
            }
            emit(out, &s)
        }
    }
}

fn execute(cli: Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::Code { code, format, cap } => cmd_code(&code.build()?, format, cap, out),
        Command::Encode {
            code,
            msg,
            index,
            format,
        } => {
            let c = code.build()?;
            let ext = c.ext();
            let message = match (msg, index) {
                (Some(m), _) => split_list(&m)
                    .iter()
                    .map(|t| ext.parse_element(t))
                    .collect::<Result<Vec<_>>>()?,
                (None, Some(i)) => {
                    if i as u128 >= c.size() {
                        return Err(Error::InvalidParams(format!("message index {i} ≥ {}", c.size())));
                    }
                    c.message_from_index(i)
                }
                (None, None) => return Err(Error::Parse("encode needs --msg or --index".into())),
            };
            let w = c.encode(&message)?;
            match format {
                Format::Text => emit(out, &format!("{}\n", inline(&w.mat))),
                Format::Json => emit_json(
                    out,
                    &json!({
                        "message": elements_json(ext, &message),
                        "message_index": c.message_index(&message),
                        "vector": elements_json(ext, &w.vec),
                        "matrix": w.mat.to_json(),
                    }),
                ),
            }
        }
        Command::Lift { q, input, format } => {
            let a = input.read(FieldCtx::new(q)?, stdin)?;
            let u = lift_matrix(&a);
            match format {
                Format::Text => emit(out, &format!("{}\n", inline(u.basis()))),
                Format::Json => emit_json(out, &json!({ "lifted_basis": u.basis().to_json() })),
            }
        }
        Command::Embed { q, input, format } => {
            let u = input.read_subspace(FieldCtx::new(q)?, stdin)?;
            let p = embed(&u);
            match format {
                Format::Text => emit(out, &format!("{p}\n")),
                Format::Json => emit_json(out, &json!({ "n": p.n, "k": p.k, "pluecker": p.coords })),
            }
        }
        Command::Shuffle {
            q,
            n,
            k,
            full,
            format,
        } => {
            FieldCtx::new(q)?;
            if k == 0 || k > n {
                return Err(Error::InvalidParams(format!("need 1 ≤ k ≤ n, got n={n}, k={k}")));
            }
            let rels = if full {
                full_pluecker_relations(n, k)
            } else {
                shuffle_relations(n, k)
            };
            let lines: Vec<String> = rels.iter().map(|r| r.to_string()).collect();
            match format {
                Format::Text => emit(out, &lines.iter().map(|l| format!("{l}\n")).collect::<String>()),
                Format::Json => emit_json(out, &json!({ "count": lines.len(), "relations": lines })),
            }
        }
        Command::Ball {
            q,
            n,
            k,
            e,
            input,
            format,
        } => {
            let r = input.read_subspace(FieldCtx::new(q)?, stdin)?;
            if r.ambient() != n || r.dim() != k {
                return Err(Error::Shape(format!(
                    "received a {}-space in F_q^{}, expected k={k}, n={n}",
                    r.dim(),
                    r.ambient()
                )));
            }
            let bound = bound_tuple(n, k, e)?;
            let forms = ball_equations(&r, e)?;
            let (_, a_inv) = construction4(&r);
            let tau = tau_count(n, k, e);
            match format {
                Format::Text => {
                    let mut s = format!("tau: {tau}\nbound: {bound}\nA^-1: {}\n", inline(&a_inv));
                    for f in &forms {
                        s += &format!("{}\n", f.display(n, k));
                    }
                    emit(out, &s)
                }
                Format::Json => {
                    let forbidden: Vec<String> = ball_forbidden_tuples(n, k, e)?.iter().map(|t| t.to_string()).collect();
                    let fs: Vec<Value> = forms
                        .iter()
                        .map(|f| json!({ "coeffs": f.coeffs, "rhs": f.rhs, "text": f.display(n, k).to_string() }))
                        .collect();
                    emit_json(
                        out,
                        &json!({ "tau": tau, "bound": bound.to_string(), "forbidden": forbidden,
                                 "a_inv": a_inv.to_json(), "equations": fs }),
                    )
                }
            }
        }
        Command::Blockcode { code, format } => {
            let c = code.build()?;
            let bc = build_block_code(&c);
            let parity = extended_parity(&bc);
            let labels: Vec<String> = bc.positions.iter().map(|p| format!("x{}", p.label())).collect();
            let forms: Vec<String> = parity.iter().map(|f| f.display(c.n(), c.k()).to_string()).collect();
            let words = block_words(&c, &bc);
            match format {
                Format::Text => {
                    let mut s = format!("positions: {}\n", labels.join(" "));
                    s += &format!("Gp:\n{}", bc.gp);
                    s += &format!("Hp:\n{}", bc.hp);
                    if let Some(ws) = &words {
                        s += &format!("C^p: {}\n", ws.join(" "));
                    }
                    s += "parity:\n";
                    for f in &forms {
                        s += &format!("{f}\n");
                    }
                    emit(out, &s)
                }
                Format::Json => emit_json(
                    out,
                    &json!({ "positions": labels, "gp": bc.gp.to_json(), "hp": bc.hp.to_json(),
                             "codewords": words, "parity": forms }),
                ),
            }
        }
        Command::Decode {
            code,
            input,
            e,
            strategy,
            cap,
            format,
        } => {
            let c = code.build()?;
            let r = input.read_subspace(c.field(), stdin)?;
            cmd_decode(c, &r, e, strategy.into(), cap, format, out)
        }
        Command::Simulate {
            code,
            t,
            trials,
            seed,
            strategy,
            format,
        } => {
            let c = code.build()?;
            let records = simulate(&c, t, trials, seed, strategy.into())?;
            let mut s = String::new();
            for r in &records {
                match format {
                    Format::Json => {
                        s += &serde_json::to_string(&json!({
                            "seed": r.seed, "distance": r.distance, "list_size": r.list_size, "success": r.success,
                        }))
                        .expect("serializable");
                        s.push('\n');
                    }
                    Format::Text => {
                        s += &format!(
                            "seed={} distance={} list_size={} success={}\n",
                            r.seed, r.distance, r.list_size, r.success
                        )
                    }
                }
            }
            emit(out, &s)
        }
    }
}

/// Sorted `C^p` words as digit strings, for codes of at most 4096 words.
fn block_words(c: &GabidulinCode, bc: &crate::listdec::BlockCodeView) -> Option<Vec<String>> {
    let words: Vec<_> = c.enumerate_code(1 << 12).ok()?.collect();
    let mut out: Vec<String> = words
        .iter()
        .map(|w| {
            bc.positions
                .iter()
                .map(|p| {
                    crate::listdec::pluecker_entry_formula(p, &w.mat)
                        .expect("C^p position")
                        .to_string()
                })
                .collect()
        })
        .collect();
    out.sort();
    Some(out)
}

/// Outcome of one invocation, mapped to an exit code by [`exit_code`].
#[derive(Debug)]
pub enum Failure {
    Usage(clap::Error),
    Domain(Error),
}

pub fn exit_code(f: &Failure) -> i32 {
    match f {
        Failure::Usage(_) => 2,
        Failure::Domain(Error::Parse(_)) => 2,
        Failure::Domain(_) => 1,
    }
}

/// `{"module": ..., "error": ...}`.
pub fn error_json(e: &Error) -> String {
    json!({ "module": e.module(), "error": e.to_string() }).to_string()
}

pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write) -> std::result::Result<(), Failure>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(Failure::Usage)?;
    execute(cli, stdin, out).map_err(Failure::Domain)
}

/// Applies [`THREADS_ENV`] to the global rayon pool.
pub fn configure_threads() {
    if let Some(n) = std::env::var(THREADS_ENV).ok().and_then(|v| v.parse::<usize>().ok()) {
        // a pool already built keeps its size
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

/// Entry point of the binary; returns the process exit code.
pub fn main() -> i32 {
    configure_threads();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(std::env::args_os(), &mut std::io::stdin(), &mut out) {
        Ok(()) => 0,
        Err(Failure::Usage(e)) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            code
        }
        Err(f @ Failure::Domain(_)) => {
            let Failure::Domain(e) = &f else { unreachable!() };
            eprintln!("{}", error_json(e));
            exit_code(&f)
        }
    }
}
