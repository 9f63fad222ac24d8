//! Bundled machine-readable worked examples, used by the test suites and
//! replayable from the command line.

use serde::Deserialize;

use crate::biject::{IncreasingTree, InterleavedTree, SelfBounded};
use crate::interval::Interval;
use crate::module::BasicModule;

fn ivs(pairs: &[(usize, usize)]) -> Vec<Interval> {
    pairs.iter().map(|&(i, j)| Interval::new(i, j)).collect()
}

/// One of the seven rank-3 classification families.
#[derive(Debug, Clone, Deserialize)]
pub struct Family {
    pub critical: Vec<(usize, usize)>,
    pub optional: Vec<(usize, usize)>,
}

impl Family {
    pub fn critical_module(&self, n: usize) -> BasicModule {
        BasicModule::new(n, ivs(&self.critical)).unwrap()
    }

    pub fn optional_intervals(&self) -> Vec<Interval> {
        ivs(&self.optional)
    }

    /// All completions: the critical summands plus any subset of the
    /// optional ones.
    pub fn completions(&self, n: usize) -> Vec<BasicModule> {
        let opts = self.optional_intervals();
        (0u32..(1 << opts.len()))
            .map(|mask| {
                let extra = opts
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &iv)| iv);
                BasicModule::new(n, ivs(&self.critical).into_iter().chain(extra)).unwrap()
            })
            .collect()
    }
}

#[derive(Debug, Clone, Deserialize)]
pub struct IntroFamilies {
    pub n: usize,
    pub families: Vec<Family>,
}

pub fn intro_families() -> IntroFamilies {
    serde_json::from_str(include_str!("../fixtures/intro_families.json"))
        .expect("bundled fixture parses")
}

#[derive(Debug, Clone, Deserialize)]
struct MinimalRank4 {
    module: BasicModule,
}

/// The five-summand minimal faithfully balanced module of rank 4.
pub fn minimal_rank4() -> BasicModule {
    let f: MinimalRank4 = serde_json::from_str(include_str!("../fixtures/minimal_rank4.json"))
        .expect("bundled fixture parses");
    f.module
}

#[derive(Debug, Clone, Deserialize)]
pub struct MeetRowRaw {
    pub first: Vec<(usize, usize)>,
    pub second: Vec<(usize, usize)>,
    pub cocover: Vec<(usize, usize)>,
    pub cover: Vec<(usize, usize)>,
    pub completion: Vec<(usize, usize)>,
    pub meet: Vec<(usize, usize)>,
}

#[derive(Debug, Clone)]
pub struct MeetRow {
    pub first: BasicModule,
    pub second: BasicModule,
    pub cocover: BasicModule,
    pub cover: BasicModule,
    pub completion: BasicModule,
    pub meet: BasicModule,
}

#[derive(Debug, Clone, Deserialize)]
struct MeetTableRaw {
    n: usize,
    rows: Vec<MeetRowRaw>,
}

/// The two worked meet constructions at rank 4.
pub fn meet_table() -> Vec<MeetRow> {
    let raw: MeetTableRaw = serde_json::from_str(include_str!("../fixtures/meet_table.json"))
        .expect("bundled fixture parses");
    let m = |pairs: &[(usize, usize)]| BasicModule::new(raw.n, ivs(pairs)).unwrap();
    raw.rows
        .iter()
        .map(|r| MeetRow {
            first: m(&r.first),
            second: m(&r.second),
            cocover: m(&r.cocover),
            cover: m(&r.cover),
            completion: m(&r.completion),
            meet: m(&r.meet),
        })
        .collect()
}

#[derive(Debug, Clone, Deserialize)]
struct HasseRaw {
    n: usize,
    nodes: Vec<Vec<(usize, usize)>>,
    edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone)]
pub struct HasseFixture {
    pub nodes: Vec<BasicModule>,
    pub edges: Vec<(usize, usize)>,
}

/// The rank-3 cover digraph.
pub fn hasse_rank3() -> HasseFixture {
    let raw: HasseRaw = serde_json::from_str(include_str!("../fixtures/hasse_rank3.json"))
        .expect("bundled fixture parses");
    HasseFixture {
        nodes: raw
            .nodes
            .iter()
            .map(|p| BasicModule::new(raw.n, ivs(p)).unwrap())
            .collect(),
        edges: raw.edges,
    }
}

#[derive(Debug, Clone, Deserialize)]
pub struct WorkedTree {
    pub n: usize,
    pub module: BasicModule,
    pub tree: InterleavedTree,
    pub step_labels: Vec<usize>,
    #[serde(rename = "final")]
    pub final_tree: IncreasingTree,
}

/// The ten-vertex untangling example.
pub fn worked_tree() -> WorkedTree {
    serde_json::from_str(include_str!("../fixtures/worked_tree.json"))
        .expect("bundled fixture parses")
}

#[derive(Debug, Clone, Deserialize)]
pub struct WorkedFunctionRaw {
    pub f: Vec<usize>,
    pub positions_r: Vec<usize>,
    pub positions_l: Vec<usize>,
    pub f_r: Vec<usize>,
    pub f_l: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct WorkedFunction {
    pub f: SelfBounded,
    pub positions_r: Vec<usize>,
    pub positions_l: Vec<usize>,
    pub f_r: SelfBounded,
    pub f_l: SelfBounded,
}

/// The self-bounded function of the ten-vertex example with its split.
pub fn worked_function() -> WorkedFunction {
    let raw: WorkedFunctionRaw =
        serde_json::from_str(include_str!("../fixtures/worked_function.json"))
            .expect("bundled fixture parses");
    WorkedFunction {
        f: SelfBounded::new(raw.f).unwrap(),
        positions_r: raw.positions_r,
        positions_l: raw.positions_l,
        f_r: SelfBounded::new(raw.f_r).unwrap(),
        f_l: SelfBounded::new(raw.f_l).unwrap(),
    }
}
