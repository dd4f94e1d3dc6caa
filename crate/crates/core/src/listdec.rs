//! List decoding of lifted Gabidulin codes in Plücker coordinates.
//!
//! For `[I_k | A]` the coordinates on tuples meeting `[k]` in exactly `k−1`
//! places are `±` entries of `A`:
//! `x_i = (−1)^{k−s} A_{s, t−k}` with `s` the missing index of `[k]` and `t`
//! the one index above `k`. Restricting a lifted Gabidulin code to those
//! `k(n−k)` positions therefore gives a linear block code `C^p` of dimension
//! `ϱ`, with parity-check matrix `H^p`.
//!
//! A received space `R` is decoded by solving
//!
//! * `x_{1…k} = 1`,
//! * `H^p` on the `C^p` positions (zero-padded to all coordinates),
//! * the τ linear forms of the ball `B_{2e}(R)`,
//! * the shuffle relations,
//!
//! over F_q. Every solution is a codeword within subspace distance `2e`,
//! and every such codeword is a solution.
//!
//! Three independent routes produce the same [`DecodeList`]:
//! [`Strategy::Paper`] solves the system above, [`Strategy::Reduced`]
//! enumerates codewords and tests only the ball forms, and
//! [`Strategy::Oracle`] enumerates codewords and measures distances.

use crate::error::{Error, Result};
use crate::gabidulin::{lift, lift_matrix, GabidulinCode, RankCodeword, DEFAULT_ENUMERATION_CAP};
use crate::gf::{ExtElement, FieldCtx};
use crate::matgf::{solve_affine, AffineSpace, LinearSolution, MatGF};
use crate::pluecker::{
    all_tuples, ball_equations, binomial, embed, maximal_minors, shuffle_relations, tau_count,
    tuple_rank, IndexTuple, LinearForm, PlueckerVector, QuadraticRelation,
};
use crate::subspace::Subspace;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::time::Instant;

/// Default cap on points of the projected solution coset.
pub const DEFAULT_COSET_CAP: u64 = 1 << 20;

/// The `k(n−k)` tuples with `|i ∩ [k]| = k − 1`, in lex order.
pub fn cp_positions(n: usize, k: usize) -> Vec<IndexTuple> {
    all_tuples(n, k)
        .into_iter()
        .filter(|t| t.indices().iter().filter(|&&i| i < k).count() + 1 == k)
        .collect()
}

/// `(s, t)` (0-based) for a qualifying tuple: the missing row and the column
/// above `k`.
fn split_position(i: &IndexTuple, k: usize) -> Option<(usize, usize)> {
    if i.len() != k {
        return None;
    }
    let high: Vec<usize> = i.indices().iter().copied().filter(|&v| v >= k).collect();
    if high.len() != 1 {
        return None;
    }
    let s = (0..k).find(|v| !i.indices().contains(v))?;
    Some((s, high[0]))
}

/// `x_i = (−1)^{k−s} · a_{s, t−k}` (1-based `s`, `t`).
pub fn pluecker_entry_formula(i: &IndexTuple, a: &MatGF) -> Result<u32> {
    let k = a.rows();
    let (s, t) = split_position(i, k)
        .ok_or_else(|| Error::InvalidTuple(format!("{i} does not meet [{k}] in {} places", k.saturating_sub(1))))?;
    if t - k >= a.cols() {
        return Err(Error::InvalidTuple(format!("{i} exceeds n={}", k + a.cols())));
    }
    let f = a.field();
    // 1-based exponent k − (s+1), parity equal to k − 1 − s
    Ok(f.mul(f.sign(k - 1 - s), a.get(s, t - k)))
}

/// Inverse of [`pluecker_entry_formula`]: rebuilds `A` from its `C^p`
/// coordinates `y` (ordered like `positions`).
pub fn matrix_from_cp_coords(field: FieldCtx, k: usize, ell: usize, positions: &[IndexTuple], y: &[u32]) -> MatGF {
    let mut a = MatGF::zeros(field, k, ell);
    for (p, &v) in positions.iter().zip(y) {
        let (s, t) = split_position(p, k).expect("C^p position");
        a.set(s, t - k, field.mul(field.sign(k - 1 - s), v));
    }
    a
}

/// `C^p` with generator, parity check and a message solver.
#[derive(Debug, Clone)]
pub struct BlockCodeView {
    pub n: usize,
    pub k: usize,
    pub positions: Vec<IndexTuple>,
    /// `ϱ × k(n−k)`, row `iℓ + j` is the image of the message `α^j e_i`.
    pub gp: MatGF,
    /// `(k(n−k) − ϱ) × k(n−k)` in RREF.
    pub hp: MatGF,
    msg_cols: Vec<usize>,
    msg_solver: MatGF,
}

impl BlockCodeView {
    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// Flat message coordinates `m` with `m · G^p = y`.
    pub fn message_coords(&self, y: &[u32]) -> Vec<u32> {
        let sel: Vec<u32> = self.msg_cols.iter().map(|&c| y[c]).collect();
        self.msg_solver.vec_mul(&sel).expect("dimensions fixed at construction")
    }

    /// Positions as lex ranks among all `C(n,k)` coordinates.
    pub fn position_ranks(&self) -> Vec<usize> {
        self.positions
            .iter()
            .map(|p| tuple_rank(p, self.n).expect("position fits"))
            .collect()
    }
}

pub fn build_block_code(code: &GabidulinCode) -> BlockCodeView {
    let (n, k, ell) = (code.n(), code.k(), code.ell());
    let ext = code.ext();
    let positions = cp_positions(n, k);
    let rows: Vec<Vec<u32>> = (0..code.message_len())
        .flat_map(|i| (0..ell).map(move |j| (i, j)))
        .map(|(i, j)| {
            let mut msg: Vec<ExtElement> = vec![ext.zero(); code.message_len()];
            msg[i] = ext.alpha_pow(j as u64);
            let w = code.encode(&msg).expect("message length");
            positions
                .iter()
                .map(|p| pluecker_entry_formula(p, &w.mat).expect("C^p position"))
                .collect()
        })
        .collect();
    let gp = MatGF::from_rows(code.field(), &rows).expect("ϱ ≥ 1 rows");
    let hp = gp.kernel_basis();
    let (_, msg_cols) = gp.rref();
    debug_assert_eq!(msg_cols.len(), code.rho());
    let msg_solver = gp
        .select_cols(&msg_cols)
        .inverse()
        .expect("the pivot columns of a full-rank generator are independent");
    BlockCodeView {
        n,
        k,
        positions,
        gp,
        hp,
        msg_cols,
        msg_solver,
    }
}

/// `H̄^p`: each row of `H^p` spread onto the `C^p` positions among all
/// `C(n,k)` coordinates, zero elsewhere.
pub fn extended_parity(bc: &BlockCodeView) -> Vec<LinearForm> {
    let nvars = binomial(bc.n, bc.k);
    let ranks = bc.position_ranks();
    (0..bc.hp.rows())
        .map(|r| {
            let mut coeffs = vec![0u32; nvars];
            for (j, &pos) in ranks.iter().enumerate() {
                coeffs[pos] = bc.hp.get(r, j);
            }
            LinearForm { coeffs, rhs: 0 }
        })
        .collect()
}

/// Linear forms and quadratic relations over the `C(n,k)` coordinates.
///
/// `linear` holds, in order: `x_{1…k} = 1`, then `parity_eqs` rows of
/// `H̄^p`, then the ball forms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquationSystem {
    pub n: usize,
    pub k: usize,
    #[serde(skip)]
    pub field: FieldCtx,
    pub linear: Vec<LinearForm>,
    pub quadratic: Vec<QuadraticRelation>,
    pub parity_eqs: usize,
}

impl EquationSystem {
    pub fn nvars(&self) -> usize {
        binomial(self.n, self.k)
    }

    pub fn ball_eqs(&self) -> usize {
        self.linear.len() - 1 - self.parity_eqs
    }

    pub fn linear_matrix(&self) -> (MatGF, Vec<u32>) {
        let data: Vec<u32> = self.linear.iter().flat_map(|l| l.coeffs.iter().copied()).collect();
        let m = MatGF::new(self.field, self.linear.len(), self.nvars(), data).expect("uniform lengths");
        (m, self.linear.iter().map(|l| l.rhs).collect())
    }

    pub fn solve_linear(&self) -> Result<LinearSolution> {
        let (m, rhs) = self.linear_matrix();
        solve_affine(&m, &rhs)
    }

    /// RREF of the augmented linear part; two systems with equal RREF have
    /// the same linear solution set.
    pub fn linear_rref(&self) -> MatGF {
        let (m, rhs) = self.linear_matrix();
        let col = MatGF::new(self.field, rhs.len(), 1, rhs).expect("one rhs per row");
        m.hcat(&col).expect("same height").row_space_basis()
    }

    pub fn satisfied_by(&self, x: &[u32]) -> bool {
        self.linear.iter().all(|l| l.holds(self.field, x))
            && self.quadratic.iter().all(|q| q.holds(self.field, self.n, x))
    }

    /// Every solution over F_q, by enumerating the whole affine solution set
    /// of the linear part and filtering with the quadratic relations.
    pub fn solve_exhaustive(&self, cap: u64) -> Result<Vec<Vec<u32>>> {
        let space = match self.solve_linear()? {
            LinearSolution::Infeasible => return Ok(Vec::new()),
            LinearSolution::Affine(s) => s,
        };
        if space.size() > cap as u128 {
            return Err(Error::CapExceeded {
                size: space.size(),
                cap,
            });
        }
        let compiled: Vec<_> = self.quadratic.iter().map(|q| q.compile(self.field, self.n)).collect();
        Ok((0..space.size() as u64)
            .map(|i| space.point(i))
            .filter(|x| compiled.iter().all(|q| q.holds(self.field, x)))
            .collect())
    }
}

impl fmt::Display for EquationSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.linear.iter().enumerate() {
            let src = match i {
                0 => "normalization",
                _ if i <= self.parity_eqs => "parity",
                _ => "ball",
            };
            writeln!(f, "{}    [{src}]", l.display(self.n, self.k))?;
        }
        for qr in &self.quadratic {
            writeln!(f, "{qr}    [shuffle]")?;
        }
        Ok(())
    }
}

/// Closed-form sizes of the assembled system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SystemStats {
    pub linear_eqs: usize,
    pub quadratic_eqs: usize,
    pub vars: usize,
    pub tau: usize,
    pub parity_eqs: usize,
}

fn check_received(code: &GabidulinCode, r: &Subspace, e: usize) -> Result<()> {
    if r.field() != code.field() {
        return Err(Error::Shape(format!(
            "received space over {} but the code is over {}",
            r.field(),
            code.field()
        )));
    }
    if r.ambient() != code.n() {
        return Err(Error::Shape(format!(
            "received space lives in F_q^{}, the code in F_q^{}",
            r.ambient(),
            code.n()
        )));
    }
    if r.dim() != code.k() {
        return Err(Error::UnsupportedDimension {
            expected: code.k(),
            got: r.dim(),
        });
    }
    if e > code.k() {
        return Err(Error::InvalidRadius { e, k: code.k() });
    }
    Ok(())
}

/// `{x_{1…k} = 1} ∪ H̄^p ∪ ball(r, e) ∪ shuffle(n, k)`.
pub fn assemble_system(code: &GabidulinCode, bc: &BlockCodeView, r: &Subspace, e: usize) -> Result<EquationSystem> {
    check_received(code, r, e)?;
    let (n, k) = (code.n(), code.k());
    let nvars = binomial(n, k);
    let mut norm = vec![0u32; nvars];
    norm[0] = 1;
    let mut linear = vec![LinearForm { coeffs: norm, rhs: 1 }];
    let parity = extended_parity(bc);
    let parity_eqs = parity.len();
    linear.extend(parity);
    linear.extend(ball_equations(r, e)?);
    Ok(EquationSystem {
        n,
        k,
        field: code.field(),
        linear,
        quadratic: shuffle_relations(n, k),
        parity_eqs,
    })
}

pub fn system_report(code: &GabidulinCode, r: &Subspace, e: usize) -> Result<(EquationSystem, SystemStats)> {
    let bc = build_block_code(code);
    let sys = assemble_system(code, &bc, r, e)?;
    let stats = stats_of(&sys, code, e);
    Ok((sys, stats))
}

fn stats_of(sys: &EquationSystem, code: &GabidulinCode, e: usize) -> SystemStats {
    SystemStats {
        linear_eqs: sys.linear.len(),
        quadratic_eqs: sys.quadratic.len(),
        vars: sys.nvars(),
        tau: tau_count(code.n(), code.k(), e),
        parity_eqs: sys.parity_eqs,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// Solve the Plücker system.
    Paper,
    /// Enumerate codewords, test the ball forms.
    Reduced,
    /// Enumerate codewords, test the subspace distance.
    Oracle,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [Strategy::Paper, Strategy::Reduced, Strategy::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Paper => "paper",
            Strategy::Reduced => "reduced",
            Strategy::Oracle => "oracle",
        }
    }
}

impl std::str::FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(Strategy::Paper),
            "reduced" => Ok(Strategy::Reduced),
            "oracle" => Ok(Strategy::Oracle),
            _ => Err(Error::Parse(format!("unknown strategy `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecodeOptions {
    pub strategy: Strategy,
    pub coset_cap: u64,
    pub enumeration_cap: u64,
    /// Split the enumeration over the current rayon pool.
    pub parallel: bool,
}

impl Default for DecodeOptions {
    fn default() -> Self {
        Self {
            strategy: Strategy::Paper,
            coset_cap: DEFAULT_COSET_CAP,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            parallel: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecodeEntry {
    pub message_index: u64,
    pub message: Vec<ExtElement>,
    pub codeword: RankCodeword,
    #[serde(skip)]
    pub subspace: Subspace,
    pub pluecker: PlueckerVector,
}

/// Decoder output sorted by message index.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DecodeList {
    pub entries: Vec<DecodeEntry>,
}

impl DecodeList {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn message_indices(&self) -> Vec<u64> {
        self.entries.iter().map(|e| e.message_index).collect()
    }

    pub fn contains(&self, s: &Subspace) -> bool {
        self.entries.iter().any(|e| &e.subspace == s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DecodeStats {
    pub linear_eqs: usize,
    pub quadratic_eqs: usize,
    pub vars: usize,
    pub candidates_enumerated: u64,
    /// `paper` strategy: projected candidates whose reconstructed Plücker
    /// vector violates the system.
    pub rejected_candidates: u64,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone)]
pub struct DecodeOutcome {
    pub list: DecodeList,
    pub stats: DecodeStats,
}

/// A decoder bound to one code; the block code is computed once.
#[derive(Debug, Clone)]
pub struct ListDecoder {
    code: GabidulinCode,
    block: BlockCodeView,
    options: DecodeOptions,
}

impl ListDecoder {
    pub fn new(code: GabidulinCode) -> Self {
        Self::with_options(code, DecodeOptions::default())
    }

    pub fn with_options(code: GabidulinCode, options: DecodeOptions) -> Self {
        let block = build_block_code(&code);
        Self { code, block, options }
    }

    pub fn code(&self) -> &GabidulinCode {
        &self.code
    }

    pub fn block_code(&self) -> &BlockCodeView {
        &self.block
    }

    pub fn options(&self) -> DecodeOptions {
        self.options
    }

    pub fn set_strategy(&mut self, s: Strategy) {
        self.options.strategy = s;
    }

    pub fn assemble(&self, r: &Subspace, e: usize) -> Result<EquationSystem> {
        assemble_system(&self.code, &self.block, r, e)
    }

    pub fn decode(&self, r: &Subspace, e: usize) -> Result<DecodeOutcome> {
        self.decode_with(r, e, self.options.strategy)
    }

    pub fn decode_with(&self, r: &Subspace, e: usize, strategy: Strategy) -> Result<DecodeOutcome> {
        let start = Instant::now();
        let sys = self.assemble(r, e)?;
        let (accepted, candidates, rejected) = match strategy {
            Strategy::Paper => self.run_paper(&sys)?,
            Strategy::Reduced => self.run_reduced(&sys)?,
            Strategy::Oracle => self.run_oracle(r, e)?,
        };
        let mut entries: Vec<DecodeEntry> = accepted.into_iter().map(|i| self.entry(i)).collect();
        entries.sort_by_key(|e| e.message_index);
        let s = stats_of(&sys, &self.code, e);
        Ok(DecodeOutcome {
            list: DecodeList { entries },
            stats: DecodeStats {
                linear_eqs: s.linear_eqs,
                quadratic_eqs: s.quadratic_eqs,
                vars: s.vars,
                candidates_enumerated: candidates,
                rejected_candidates: rejected,
                elapsed_ms: start.elapsed().as_millis(),
            },
        })
    }

    fn entry(&self, message_index: u64) -> DecodeEntry {
        let codeword = self.code.encode_index(message_index);
        let subspace = lift(&codeword);
        DecodeEntry {
            message_index,
            message: self.code.message_from_index(message_index),
            pluecker: embed(&subspace),
            subspace,
            codeword,
        }
    }

    fn for_each_index<F>(&self, count: u64, f: F) -> Vec<Option<u64>>
    where
        F: Fn(u64) -> Option<u64> + Sync + Send,
    {
        if self.options.parallel {
            (0..count).into_par_iter().map(f).collect()
        } else {
            (0..count).map(f).collect()
        }
    }

    fn code_size(&self) -> Result<u64> {
        let size = self.code.size();
        let cap = self.options.enumeration_cap;
        if size > cap as u128 {
            return Err(Error::CapExceeded { size, cap });
        }
        Ok(size as u64)
    }

    /// Solves the linear part, enumerates its projection onto the `C^p`
    /// coordinates, rebuilds each candidate's full Plücker vector from
    /// `[I_k | A]` and keeps those satisfying every equation.
    fn run_paper(&self, sys: &EquationSystem) -> Result<(Vec<u64>, u64, u64)> {
        let space = match sys.solve_linear()? {
            LinearSolution::Infeasible => return Ok((Vec::new(), 0, 0)),
            LinearSolution::Affine(s) => s,
        };
        let ranks = self.block.position_ranks();
        let projected = AffineSpace {
            particular: ranks.iter().map(|&r| space.particular[r]).collect(),
            kernel: space.kernel.select_cols(&ranks).row_space_basis(),
        };
        let size = projected.size();
        let cap = self.options.coset_cap;
        if size > cap as u128 {
            return Err(Error::CapExceeded { size, cap });
        }
        let field = sys.field;
        let (k, ell) = (self.code.k(), self.code.ell());
        let compiled: Vec<_> = sys.quadratic.iter().map(|q| q.compile(field, sys.n)).collect();
        let id = MatGF::identity(field, k);
        let results = self.for_each_index(size as u64, |idx| {
            let y = projected.point(idx);
            let a = matrix_from_cp_coords(field, k, ell, &self.block.positions, &y);
            let x = maximal_minors(&id.hcat(&a).expect("k rows"));
            debug_assert!(ranks.iter().zip(&y).all(|(&r, &v)| x[r] == v));
            let ok = sys.linear.iter().all(|l| l.holds(field, &x)) && compiled.iter().all(|q| q.holds(field, &x));
            ok.then(|| {
                let coords = self.block.message_coords(&y);
                self.code.message_index_from_coords(&coords)
            })
        });
        let accepted: Vec<u64> = results.iter().flatten().copied().collect();
        let rejected = size as u64 - accepted.len() as u64;
        debug_assert!(accepted
            .iter()
            .all(|&m| sys.satisfied_by(&maximal_minors(lift(&self.code.encode_index(m)).basis()))));
        Ok((accepted, size as u64, rejected))
    }

    fn run_reduced(&self, sys: &EquationSystem) -> Result<(Vec<u64>, u64, u64)> {
        let count = self.code_size()?;
        let field = sys.field;
        let ball = &sys.linear[1 + sys.parity_eqs..];
        let results = self.for_each_index(count, |idx| {
            let w = self.code.encode_index(idx);
            let x = maximal_minors(lift_matrix(&w.mat).basis());
            ball.iter().all(|l| l.holds(field, &x)).then_some(idx)
        });
        Ok((results.into_iter().flatten().collect(), count, 0))
    }

    fn run_oracle(&self, r: &Subspace, e: usize) -> Result<(Vec<u64>, u64, u64)> {
        let count = self.code_size()?;
        let results = self.for_each_index(count, |idx| {
            let u = lift(&self.code.encode_index(idx));
            (u.distance(r).expect("checked dimensions") <= 2 * e).then_some(idx)
        });
        Ok((results.into_iter().flatten().collect(), count, 0))
    }
}

/// Every codeword of the lifted code within subspace distance `2e` of `r`.
pub fn decode_list(code: &GabidulinCode, r: &Subspace, e: usize, strategy: Strategy) -> Result<DecodeList> {
    let dec = ListDecoder::with_options(
        code.clone(),
        DecodeOptions {
            strategy,
            ..DecodeOptions::default()
        },
    );
    Ok(dec.decode(r, e)?.list)
}
