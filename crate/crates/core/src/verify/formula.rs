//! Closed forms for every family, with the parameter ranges in which they are claimed.

use serde::Serialize;

use crate::topology::{Family, TopologySpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Quantity {
    #[serde(rename = "t_c")]
    Tc,
    #[serde(rename = "kappa2")]
    Kappa2,
    /// Minimum `|N(T)|` over 3-paths and 3-cycles.
    #[serde(rename = "min_NT")]
    MinNt,
    /// Minimum `|N(C3)|` over 3-cycles only.
    #[serde(rename = "min_N_C3")]
    MinNC3,
    /// Minimum `|N(P3)|` over 3-paths with one swap and one unswap edge.
    #[serde(rename = "min_N_P3_mixed")]
    MinNP3Mixed,
    #[serde(rename = "ell")]
    Ell,
    #[serde(rename = "order")]
    Order,
    #[serde(rename = "degree")]
    Degree,
}

impl std::str::FromStr for Quantity {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        Ok(match s {
            "t_c" | "tc" => Quantity::Tc,
            "kappa2" | "kappa_2" => Quantity::Kappa2,
            "min_NT" | "min_nt" => Quantity::MinNt,
            "min_N_C3" | "min_n_c3" => Quantity::MinNC3,
            "min_N_P3_mixed" | "min_n_p3_mixed" => Quantity::MinNP3Mixed,
            "ell" => Quantity::Ell,
            "order" => Quantity::Order,
            "degree" => Quantity::Degree,
            other => return Err(crate::Error::Parse(format!("unknown quantity {other:?}"))),
        })
    }
}

/// Where a closed form comes from; only `Cited` entries are taken from earlier literature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// Order and degree straight from the construction.
    Definition,
    /// Equality of t_c and kappa2 derived for the family.
    Theorem,
    /// Direct count of a 3-subgraph's neighborhood.
    NeighborCount,
    /// Common-neighbor case analysis for the family.
    CommonNeighbor,
    /// A previously published value quoted for comparison.
    Cited,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Params {
    pub n: i64,
    pub k: i64,
}

#[derive(Clone, Copy, Serialize)]
pub struct FormulaEntry {
    pub family: Family,
    pub quantity: Quantity,
    pub expression: &'static str,
    pub range: &'static str,
    pub source: Source,
    pub claim: &'static str,
    #[serde(skip)]
    pub in_range: fn(Params) -> bool,
    #[serde(skip)]
    pub eval: fn(Params) -> i64,
}

impl std::fmt::Debug for FormulaEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FormulaEntry")
            .field("family", &self.family)
            .field("quantity", &self.quantity)
            .field("expression", &self.expression)
            .field("range", &self.range)
            .field("source", &self.source)
            .finish()
    }
}

fn fact(n: i64) -> i64 {
    (1..=n).product()
}

fn kary_t(p: Params) -> i64 {
    match p.k {
        2 => 3 * p.n - 5,
        3 => 6 * p.n - 7,
        _ => 6 * p.n - 5,
    }
}

fn arr_ok(p: Params) -> bool {
    p.n >= p.k + 2 && p.k >= 2
}

macro_rules! entry {
    ($fam:ident, $q:ident, $expr:literal, $range:literal, $src:ident, $claim:literal, |$p:ident| $ok:expr, |$e:ident| $val:expr) => {
        FormulaEntry {
            family: Family::$fam,
            quantity: Quantity::$q,
            expression: $expr,
            range: $range,
            source: Source::$src,
            claim: $claim,
            in_range: |$p: Params| $ok,
            eval: |$e: Params| $val,
        }
    };
}

/// The complete static table.
pub fn formula_table() -> Vec<FormulaEntry> {
    vec![
        entry!(Star, Order, "n!", "n >= 2", Definition, "star graph has n! vertices", |p| p.n >= 2, |p| fact(p.n)),
        entry!(Star, Degree, "n-1", "n >= 2", Definition, "star graph is (n-1)-regular", |p| p.n >= 2, |p| p.n - 1),
        entry!(Star, Tc, "3n-7", "n >= 5", Theorem, "t_c(S_n) = 3n-7 = kappa2(S_n) for n >= 5", |p| p.n >= 5, |p| 3
            * p.n
            - 7),
        entry!(
            Star,
            Kappa2,
            "3n-7",
            "n >= 5",
            Theorem,
            "t_c(S_n) = 3n-7 = kappa2(S_n) for n >= 5",
            |p| p.n >= 5,
            |p| 3 * p.n - 7
        ),
        entry!(Star, Tc, "3n-7", "n >= 4", Cited, "earlier result: t_c(S_n) = 3n-7 for n >= 4", |p| p.n >= 4, |p| 3
            * p.n
            - 7),
        entry!(Star, MinNt, "3n-7", "n >= 3", NeighborCount, "|N(P3)| = 3(n-1)-4 = 3n-7 in S_n", |p| p.n >= 3, |p| 3
            * p.n
            - 7),
        entry!(
            Star,
            Ell,
            "1",
            "n >= 3",
            CommonNeighbor,
            "non-adjacent vertices of S_n share at most one neighbor",
            |p| p.n >= 3,
            |_p| 1
        ),
        entry!(BubbleSort, Order, "n!", "n >= 2", Definition, "bubble-sort graph has n! vertices", |p| p.n >= 2, |p| {
            fact(p.n)
        }),
        entry!(
            BubbleSort,
            Degree,
            "n-1",
            "n >= 2",
            Definition,
            "bubble-sort graph is (n-1)-regular",
            |p| p.n >= 2,
            |p| p.n - 1
        ),
        entry!(
            BubbleSort,
            Tc,
            "3n-8",
            "n >= 7",
            Theorem,
            "t_c(B_n) = 3n-8 = kappa2(B_n) for n >= 7",
            |p| p.n >= 7,
            |p| 3 * p.n - 8
        ),
        entry!(
            BubbleSort,
            Kappa2,
            "3n-8",
            "n >= 7",
            Theorem,
            "t_c(B_n) = 3n-8 = kappa2(B_n) for n >= 7",
            |p| p.n >= 7,
            |p| 3 * p.n - 8
        ),
        entry!(
            BubbleSort,
            Tc,
            "3n-8",
            "n >= 4",
            Cited,
            "earlier result: t_c = 3n-8 for non-star transposition trees, n >= 4",
            |p| p.n >= 4,
            |p| 3 * p.n - 8
        ),
        entry!(
            BubbleSort,
            Kappa2,
            "3n-8",
            "n >= 4",
            Cited,
            "earlier result: kappa2 = 3n-8 for non-star transposition trees, n >= 4",
            |p| p.n >= 4,
            |p| 3 * p.n - 8
        ),
        entry!(
            BubbleSort,
            MinNt,
            "3n-8",
            "n >= 4",
            NeighborCount,
            "|N(P3)| = 3n-8 for a 3-path in a 4-cycle",
            |p| p.n >= 4,
            |p| 3 * p.n - 8
        ),
        entry!(
            BubbleSort,
            Ell,
            "2",
            "n >= 4",
            CommonNeighbor,
            "non-adjacent vertices share at most two neighbors in non-star transposition graphs",
            |p| p.n >= 4,
            |_p| 2
        ),
        entry!(
            TranspositionTree,
            Order,
            "n!",
            "n >= 2",
            Definition,
            "transposition graph has n! vertices",
            |p| p.n >= 2,
            |p| fact(p.n)
        ),
        entry!(
            TranspositionTree,
            Degree,
            "n-1",
            "n >= 2",
            Definition,
            "transposition graph is (n-1)-regular",
            |p| p.n >= 2,
            |p| p.n - 1
        ),
        entry!(
            TranspositionTree,
            Tc,
            "3n-8",
            "non-star tree, n >= 7",
            Theorem,
            "t_c(T_n(S)) = 3n-8 = kappa2(T_n(S)) for n >= 7",
            |p| p.n >= 7,
            |p| 3 * p.n - 8
        ),
        entry!(
            TranspositionTree,
            Kappa2,
            "3n-8",
            "non-star tree, n >= 7",
            Theorem,
            "t_c(T_n(S)) = 3n-8 = kappa2(T_n(S)) for n >= 7",
            |p| p.n >= 7,
            |p| 3 * p.n - 8
        ),
        entry!(
            TranspositionTree,
            Tc,
            "3n-8",
            "non-star tree, n >= 4",
            Cited,
            "earlier result: t_c(T_n(S)) = 3n-8 for n >= 4",
            |p| p.n >= 4,
            |p| 3 * p.n - 8
        ),
        entry!(
            TranspositionTree,
            Kappa2,
            "3n-8",
            "non-star tree, n >= 4",
            Cited,
            "earlier result: kappa2(T_n(S)) = 3n-8 for n >= 4",
            |p| p.n >= 4,
            |p| 3 * p.n - 8
        ),
        entry!(
            TranspositionTree,
            MinNt,
            "3n-8",
            "non-star tree, n >= 4",
            NeighborCount,
            "|N(P3)| = 3n-8 for a 3-path in a 4-cycle",
            |p| p.n >= 4,
            |p| 3 * p.n - 8
        ),
        entry!(
            TranspositionTree,
            Ell,
            "2",
            "non-star tree, n >= 4",
            CommonNeighbor,
            "non-adjacent vertices share at most two neighbors",
            |p| p.n >= 4,
            |_p| 2
        ),
        entry!(AltGroupGraph, Order, "n!/2", "n >= 3", Definition, "AG_n has n!/2 vertices", |p| p.n >= 3, |p| fact(
            p.n
        ) / 2),
        entry!(AltGroupGraph, Degree, "2n-4", "n >= 3", Definition, "AG_n is (2n-4)-regular", |p| p.n >= 3, |p| 2 * p
            .n
            - 4),
        entry!(
            AltGroupGraph,
            Tc,
            "6n-19",
            "n >= 6",
            Theorem,
            "t_c(AG_n) = 6n-19 = kappa2(AG_n) for n >= 6",
            |p| p.n >= 6,
            |p| 6 * p.n - 19
        ),
        entry!(
            AltGroupGraph,
            Kappa2,
            "6n-19",
            "n >= 6",
            Theorem,
            "t_c(AG_n) = 6n-19 = kappa2(AG_n) for n >= 6",
            |p| p.n >= 6,
            |p| 6 * p.n - 19
        ),
        entry!(
            AltGroupGraph,
            Kappa2,
            "6n-19",
            "n >= 5",
            Cited,
            "earlier result: kappa2(AG_n) = 6n-19 for n >= 5",
            |p| p.n >= 5,
            |p| 6 * p.n - 19
        ),
        entry!(
            AltGroupGraph,
            Tc,
            "6n-19",
            "n >= 6",
            Cited,
            "earlier result: t_c(AG_n) = 6n-19 for n >= 6",
            |p| p.n >= 6,
            |p| 6 * p.n - 19
        ),
        entry!(AltGroupGraph, Tc, "4", "n = 4", Cited, "earlier result: t_c(AG_4) = 4", |p| p.n == 4, |_p| 4),
        entry!(
            AltGroupGraph,
            MinNt,
            "6n-19",
            "n >= 4",
            NeighborCount,
            "AG_n is isomorphic to A_{n,n-2}, so |N(P3)| = 6n-19",
            |p| p.n >= 4,
            |p| 6 * p.n - 19
        ),
        entry!(
            AltGroupGraph,
            Ell,
            "2",
            "n >= 4",
            CommonNeighbor,
            "AG_n is isomorphic to A_{n,n-2}, whose non-adjacent pairs share at most two neighbors",
            |p| p.n >= 4,
            |_p| 2
        ),
        entry!(AltGroupNetwork, Order, "n!/2", "n >= 3", Definition, "AN_n has n!/2 vertices", |p| p.n >= 3, |p| fact(
            p.n
        ) / 2),
        entry!(AltGroupNetwork, Degree, "n-1", "n >= 3", Definition, "AN_n is (n-1)-regular", |p| p.n >= 3, |p| p.n
            - 1),
        entry!(
            AltGroupNetwork,
            Tc,
            "3n-9",
            "n >= 5",
            Theorem,
            "t_c(AN_n) = 3n-9 = kappa2(AN_n) for n >= 5",
            |p| p.n >= 5,
            |p| 3 * p.n - 9
        ),
        entry!(
            AltGroupNetwork,
            Kappa2,
            "3n-9",
            "n >= 5",
            Theorem,
            "t_c(AN_n) = 3n-9 = kappa2(AN_n) for n >= 5",
            |p| p.n >= 5,
            |p| 3 * p.n - 9
        ),
        entry!(
            AltGroupNetwork,
            Tc,
            "3n-9",
            "n >= 5",
            Cited,
            "earlier result: t_c(AN_n) = 3n-9 for n >= 5",
            |p| p.n >= 5,
            |p| 3 * p.n - 9
        ),
        entry!(
            AltGroupNetwork,
            Kappa2,
            "3n-9",
            "n >= 4",
            Cited,
            "earlier result: kappa2(AN_n) = 3n-9 for n >= 4",
            |p| p.n >= 4,
            |p| 3 * p.n - 9
        ),
        entry!(
            AltGroupNetwork,
            MinNt,
            "3n-9",
            "n >= 4",
            NeighborCount,
            "AN_n is isomorphic to S_{n,n-2}, so |N(C3)| = 3n-9",
            |p| p.n >= 4,
            |p| 3 * p.n - 9
        ),
        entry!(
            AltGroupNetwork,
            Ell,
            "1",
            "n >= 4",
            CommonNeighbor,
            "AN_n is isomorphic to S_{n,n-2}, whose non-adjacent pairs share at most one neighbor",
            |p| p.n >= 4,
            |_p| 1
        ),
        entry!(
            Arrangement,
            Order,
            "n!/(n-k)!",
            "1 <= k < n",
            Definition,
            "A_{n,k} has n!/(n-k)! vertices",
            |p| p.k >= 1 && p.k < p.n,
            |p| fact(p.n) / fact(p.n - p.k)
        ),
        entry!(
            Arrangement,
            Degree,
            "k(n-k)",
            "1 <= k < n",
            Definition,
            "A_{n,k} is k(n-k)-regular",
            |p| p.k >= 1 && p.k < p.n,
            |p| p.k * (p.n - p.k)
        ),
        entry!(
            Arrangement,
            Tc,
            "(3k-2)(n-k)-3",
            "n >= k+2 and k(n-k) >= 8",
            Theorem,
            "t_c(A_{n,k}) = (3k-2)(n-k)-3 = kappa2(A_{n,k}) for n >= k+2 and k(n-k) >= 8",
            |p| p.n >= p.k + 2 && p.k * (p.n - p.k) >= 8,
            |p| (3 * p.k - 2) * (p.n - p.k) - 3
        ),
        entry!(
            Arrangement,
            Kappa2,
            "(3k-2)(n-k)-3",
            "n >= k+2 and k(n-k) >= 8",
            Theorem,
            "t_c(A_{n,k}) = (3k-2)(n-k)-3 = kappa2(A_{n,k}) for n >= k+2 and k(n-k) >= 8",
            |p| p.n >= p.k + 2 && p.k * (p.n - p.k) >= 8,
            |p| (3 * p.k - 2) * (p.n - p.k) - 3
        ),
        entry!(
            Arrangement,
            Tc,
            "(3k-2)(n-k)-3",
            "n >= k+2 and k >= 4",
            Cited,
            "earlier result: t_c(A_{n,k}) = (3k-2)(n-k)-3 for n >= k+2 and k >= 4",
            |p| p.n >= p.k + 2 && p.k >= 4,
            |p| (3 * p.k - 2) * (p.n - p.k) - 3
        ),
        entry!(
            Arrangement,
            MinNt,
            "(3k-2)(n-k)-3",
            "n >= k+2, k >= 2",
            NeighborCount,
            "|N(P3)| = (3k-2)(n-k)-3 in A_{n,k}",
            |p| arr_ok(p),
            |p| (3 * p.k - 2) * (p.n - p.k) - 3
        ),
        entry!(
            Arrangement,
            MinNC3,
            "(3k-2)(n-k)-2",
            "n >= k+2, k >= 2",
            NeighborCount,
            "|N(C3)| = (3k-2)(n-k)-2 in A_{n,k}",
            |p| arr_ok(p),
            |p| (3 * p.k - 2) * (p.n - p.k) - 2
        ),
        entry!(
            Arrangement,
            Ell,
            "2",
            "n >= k+2, k >= 2",
            CommonNeighbor,
            "non-adjacent vertices of A_{n,k} share at most two neighbors",
            |p| arr_ok(p),
            |_p| 2
        ),
        entry!(
            NkStar,
            Order,
            "n!/(n-k)!",
            "1 <= k < n",
            Definition,
            "S_{n,k} has n!/(n-k)! vertices",
            |p| p.k >= 1 && p.k < p.n,
            |p| fact(p.n) / fact(p.n - p.k)
        ),
        entry!(
            NkStar,
            Degree,
            "n-1",
            "1 <= k < n",
            Definition,
            "S_{n,k} is (n-1)-regular",
            |p| p.k >= 1 && p.k < p.n,
            |p| p.n - 1
        ),
        entry!(
            NkStar,
            Tc,
            "n+2k-5",
            "n >= k+2 and k >= 3",
            Theorem,
            "t_c(S_{n,k}) = n+2k-5 = kappa2(S_{n,k}) for n >= k+2 and k >= 3",
            |p| p.n >= p.k + 2 && p.k >= 3,
            |p| p.n + 2 * p.k - 5
        ),
        entry!(
            NkStar,
            Kappa2,
            "n+2k-5",
            "n >= k+2 and k >= 3",
            Theorem,
            "t_c(S_{n,k}) = n+2k-5 = kappa2(S_{n,k}) for n >= k+2 and k >= 3",
            |p| p.n >= p.k + 2 && p.k >= 3,
            |p| p.n + 2 * p.k - 5
        ),
        entry!(
            NkStar,
            Tc,
            "n+2k-5",
            "n >= k+2 and k >= 3",
            Cited,
            "earlier result: t_c(S_{n,k}) = n+2k-5 for n >= k+2 and k >= 3",
            |p| p.n >= p.k + 2 && p.k >= 3,
            |p| p.n + 2 * p.k - 5
        ),
        entry!(
            NkStar,
            MinNt,
            "n+2k-5",
            "n >= k+2, k >= 2",
            NeighborCount,
            "the minimum is attained by a 3-cycle: |N(C3)| = n+2k-5",
            |p| arr_ok(p),
            |p| p.n + 2 * p.k - 5
        ),
        entry!(
            NkStar,
            MinNC3,
            "n+2k-5",
            "n >= k+2, k >= 2",
            NeighborCount,
            "|N(C3)| = n+2k-5 in S_{n,k}",
            |p| arr_ok(p),
            |p| p.n + 2 * p.k - 5
        ),
        entry!(
            NkStar,
            MinNP3Mixed,
            "2n+k-6",
            "n >= k+2, k >= 2",
            NeighborCount,
            "|N(P3)| = 2n+k-6 for a 3-path with one swap and one unswap edge",
            |p| arr_ok(p),
            |p| 2 * p.n + p.k - 6
        ),
        entry!(
            NkStar,
            Ell,
            "1",
            "n >= k+2, k >= 2",
            CommonNeighbor,
            "non-adjacent vertices of S_{n,k} share at most one neighbor",
            |p| arr_ok(p),
            |_p| 1
        ),
        entry!(
            KaryNcube,
            Order,
            "k^n",
            "k >= 2, n >= 1",
            Definition,
            "Q_n^k has k^n vertices",
            |p| p.k >= 2 && p.n >= 1,
            |p| p.k.pow(p.n as u32)
        ),
        entry!(
            KaryNcube,
            Degree,
            "2n (k >= 3), n (k = 2)",
            "k >= 2, n >= 1",
            Definition,
            "Q_n^k is 2n-regular for k >= 3 and the hypercube is n-regular",
            |p| p.k >= 2 && p.n >= 1,
            |p| if p.k == 2 { p.n } else { 2 * p.n }
        ),
        entry!(
            KaryNcube,
            Tc,
            "6n-5 (k >= 4), 6n-7 (k = 3), 3n-5 (k = 2)",
            "n >= 8 if k = 5, n >= 6 otherwise",
            Theorem,
            "t_c(Q_n^k) = kappa2(Q_n^k) = piecewise t for n >= 8 if k = 5 and n >= 6 otherwise",
            |p| p.k >= 2 && if p.k == 5 { p.n >= 8 } else { p.n >= 6 },
            |p| kary_t(p)
        ),
        entry!(
            KaryNcube,
            Kappa2,
            "6n-5 (k >= 4), 6n-7 (k = 3), 3n-5 (k = 2)",
            "n >= 8 if k = 5, n >= 6 otherwise",
            Theorem,
            "t_c(Q_n^k) = kappa2(Q_n^k) = piecewise t for n >= 8 if k = 5 and n >= 6 otherwise",
            |p| p.k >= 2 && if p.k == 5 { p.n >= 8 } else { p.n >= 6 },
            |p| kary_t(p)
        ),
        entry!(
            KaryNcube,
            Kappa2,
            "3n-5 (k = 2), 6n-7 (k = 3), 6n-5 (k >= 4)",
            "k = 2: n >= 4; k = 3: n >= 3; k >= 4: n >= 5",
            Cited,
            "earlier results: kappa2 of hypercubes (n >= 4), 3-ary cubes (n >= 3) and k-ary cubes with k >= 4 (n >= 5)",
            |p| (p.k == 2 && p.n >= 4) || (p.k == 3 && p.n >= 3) || (p.k >= 4 && p.n >= 5),
            |p| kary_t(p)
        ),
        entry!(
            KaryNcube,
            Tc,
            "3n-5",
            "k = 2, n >= 5",
            Cited,
            "earlier result: t_c of the hypercube is 3n-5 for n >= 5",
            |p| p.k == 2 && p.n >= 5,
            |p| 3 * p.n - 5
        ),
        entry!(
            KaryNcube,
            MinNt,
            "6n-5 (k >= 4), 6n-7 (k = 3), 3n-5 (k = 2)",
            "k >= 2, n >= 2",
            NeighborCount,
            "minimum |N(P3)| equals the piecewise t",
            |p| p.k >= 2 && p.n >= 2,
            |p| kary_t(p)
        ),
        entry!(
            KaryNcube,
            Ell,
            "2",
            "k >= 2, n >= 2",
            CommonNeighbor,
            "non-adjacent vertices of Q_n^k share zero or two neighbors",
            |p| p.k >= 2 && p.n >= 2,
            |_p| 2
        ),
        entry!(DualCube, Order, "2^(2n+1)", "n >= 1", Definition, "DC_n has 2^(2n+1) vertices", |p| p.n >= 1, |p| 1
            << (2 * p.n + 1)),
        entry!(DualCube, Degree, "n+1", "n >= 1", Definition, "DC_n is (n+1)-regular", |p| p.n >= 1, |p| p.n + 1),
        entry!(
            DualCube,
            Tc,
            "3n-2",
            "n >= 5",
            Theorem,
            "t_c(DC_n) = 3n-2 = kappa2(DC_n) for n >= 5",
            |p| p.n >= 5,
            |p| 3 * p.n - 2
        ),
        entry!(
            DualCube,
            Kappa2,
            "3n-2",
            "n >= 5",
            Theorem,
            "t_c(DC_n) = 3n-2 = kappa2(DC_n) for n >= 5",
            |p| p.n >= 5,
            |p| 3 * p.n - 2
        ),
        entry!(
            DualCube,
            Tc,
            "3n-2",
            "n >= 3",
            Cited,
            "earlier result: t_c(DC_n) = 3n-2 for n >= 3",
            |p| p.n >= 3,
            |p| 3 * p.n - 2
        ),
        entry!(
            DualCube,
            Kappa2,
            "3n-2",
            "n >= 3",
            Cited,
            "earlier result: kappa2(DC_n) = 3n-2 for n >= 3",
            |p| p.n >= 3,
            |p| 3 * p.n - 2
        ),
        entry!(
            DualCube,
            MinNt,
            "3n-2",
            "n >= 2",
            NeighborCount,
            "|N(P3)| = 3(n+1)-4-1 = 3n-2 in DC_n",
            |p| p.n >= 2,
            |p| 3 * p.n - 2
        ),
        entry!(
            DualCube,
            Ell,
            "2",
            "n >= 2",
            CommonNeighbor,
            "non-adjacent vertices of DC_n share at most two neighbors",
            |p| p.n >= 2,
            |_p| 2
        ),
    ]
}

/// The family and parameters a spec is looked up under.
pub fn resolve(spec: &TopologySpec) -> Option<(Family, Params)> {
    let n = spec.n as i64;
    let k = spec.k.map_or(0, |k| k as i64);
    match spec.family {
        Family::Hypercube => Some((Family::KaryNcube, Params { n, k: 2 })),
        Family::TranspositionTree if spec.is_star_shaped_tree() => Some((Family::Star, Params { n, k })),
        f => Some((f, Params { n, k })),
    }
}

/// Entries for the quantity whose parameters are in range, claims before citations.
pub fn lookup_all(family: Family, params: Params, quantity: Quantity) -> Vec<FormulaEntry> {
    let mut hits: Vec<FormulaEntry> = formula_table()
        .into_iter()
        .filter(|e| e.family == family && e.quantity == quantity && (e.in_range)(params))
        .collect();
    hits.sort_by_key(|e| e.source == Source::Cited);
    hits
}

pub fn lookup(family: Family, params: Params, quantity: Quantity) -> Option<(i64, FormulaEntry)> {
    lookup_all(family, params, quantity).into_iter().next().map(|e| ((e.eval)(params), e))
}

pub fn lookup_spec(spec: &TopologySpec, quantity: Quantity) -> Vec<FormulaEntry> {
    resolve(spec).map_or_else(Vec::new, |(f, p)| lookup_all(f, p, quantity))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookups() {
        let p = |n, k| Params { n, k };
        assert_eq!(lookup(Family::Star, p(5, 0), Quantity::Tc).unwrap().0, 8);
        assert_eq!(lookup(Family::KaryNcube, p(6, 2), Quantity::Kappa2).unwrap().0, 13);
        assert_eq!(lookup(Family::AltGroupGraph, p(6, 0), Quantity::Tc).unwrap().0, 17);
        assert_eq!(lookup(Family::AltGroupGraph, p(4, 0), Quantity::Tc).unwrap().1.source, Source::Cited);
        assert!(lookup(Family::Arrangement, p(4, 2), Quantity::Tc).is_none());
        let dc3 = lookup(Family::DualCube, p(3, 0), Quantity::Kappa2).unwrap();
        assert_eq!((dc3.0, dc3.1.source), (7, Source::Cited));
        assert!(lookup(Family::KaryNcube, p(7, 5), Quantity::Tc).is_none());
        assert_eq!(lookup(Family::KaryNcube, p(8, 5), Quantity::Tc).unwrap().0, 43);
    }

    #[test]
    fn every_entry_evaluates_in_range() {
        for e in formula_table() {
            let found = (1..=9).flat_map(|n| (0..n).map(move |k| Params { n, k })).find(|&p| (e.in_range)(p));
            let p = found.unwrap_or(Params { n: 8, k: 5 });
            let _ = (e.eval)(p);
        }
    }

    #[test]
    fn table_serializes_without_closures() {
        let json = serde_json::to_value(formula_table()).unwrap();
        assert!(json[0].get("in_range").is_none());
        assert_eq!(json[0]["quantity"], "order");
    }
}
