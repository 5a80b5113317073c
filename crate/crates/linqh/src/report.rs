//! The JSON structure report.

use linqh_core::borel::ExistenceReport;
use linqh_core::linquiver::{CutKind, SegmentDirection};
use linqh_core::presentations::FormalityReport;
use linqh_core::rep_oracle::IntervalOracle;
use linqh_core::{Interval, LinearQh, MonomialPresentation, Result, Vertex};
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct StructureReport {
    pub quiver: QuiverJson,
    pub segments: Vec<SegmentJson>,
    pub trees: Vec<String>,
    pub order: Vec<[Vertex; 2]>,
    pub essential_order: Vec<[Vertex; 2]>,
    pub standard: Vec<VertexInterval>,
    pub costandard: Vec<VertexInterval>,
    pub tilting: Vec<VertexInterval>,
    pub ext_algebra: PresentationJson,
    pub ringel_dual: Vec<PresentationJson>,
    pub borel: BorelJson,
    pub formality: FormalityJson,
}

#[derive(Debug, Serialize)]
pub struct QuiverJson {
    pub n: usize,
    pub orientation: String,
    pub cuts: Vec<CutJson>,
}

#[derive(Debug, Serialize)]
pub struct CutJson {
    pub vertex: Vertex,
    pub kind: &'static str,
}

#[derive(Debug, Serialize)]
pub struct SegmentJson {
    pub lo: Vertex,
    pub hi: Vertex,
    pub direction: &'static str,
}

#[derive(Debug, Serialize)]
pub struct VertexInterval {
    pub vertex: Vertex,
    pub interval: [Vertex; 2],
}

#[derive(Debug, Serialize)]
pub struct ArrowJson {
    pub name: String,
    pub src: Vertex,
    pub tgt: Vertex,
    pub degree: u32,
}

#[derive(Debug, Serialize)]
pub struct PresentationJson {
    pub vertices: Vec<Vertex>,
    pub arrows: Vec<ArrowJson>,
    pub relations: Vec<String>,
    pub dimension: usize,
}

#[derive(Debug, Serialize)]
pub struct SinkJson {
    pub vertex: Vertex,
    pub minimal: bool,
    pub maximal: bool,
}

#[derive(Debug, Serialize)]
pub struct WitnessJson {
    pub vertex: Vertex,
    pub blocking_standard: Vertex,
}

#[derive(Debug, Serialize)]
pub struct BorelJson {
    pub verdict: bool,
    pub sinks: Vec<SinkJson>,
    pub witnesses: Vec<WitnessJson>,
    /// Absent when no regular exact Borel subalgebra exists.
    pub arrows: Option<Vec<[Vertex; 2]>>,
    pub generators: Option<Vec<String>>,
}

#[derive(Debug, Serialize)]
pub struct FormalityJson {
    pub passed: bool,
    pub chains_checked: usize,
    pub witnesses: Vec<FormalityWitnessJson>,
}

#[derive(Debug, Serialize)]
pub struct FormalityWitnessJson {
    pub chain: Vec<String>,
    pub cell: [usize; 3],
}

fn pairs(v: Vec<(Vertex, Vertex)>) -> Vec<[Vertex; 2]> {
    v.into_iter().map(|(a, b)| [a, b]).collect()
}

fn intervals(xs: impl IntoIterator<Item = (Vertex, Interval)>) -> Vec<VertexInterval> {
    xs.into_iter().map(|(vertex, x)| VertexInterval { vertex, interval: [x.a, x.b] }).collect()
}

pub fn presentation_json(p: &MonomialPresentation) -> Result<PresentationJson> {
    Ok(PresentationJson {
        vertices: p.vertices().collect(),
        arrows: p.arrows().map(|a| ArrowJson { name: a.name(), src: a.src, tgt: a.tgt, degree: a.degree }).collect(),
        relations: p.relations(),
        dimension: p.dimension()?,
    })
}

fn formality_json(r: &FormalityReport) -> FormalityJson {
    FormalityJson {
        passed: r.passed(),
        chains_checked: r.chains_checked,
        witnesses: r
            .witnesses
            .iter()
            .map(|w| FormalityWitnessJson {
                chain: w.chain.iter().map(ToString::to_string).collect(),
                cell: [w.cell.0, w.cell.1, w.cell.2 as usize],
            })
            .collect(),
    }
}

fn borel_json(qh: &LinearQh, report: &ExistenceReport) -> Result<BorelJson> {
    let (arrows, generators) = if report.verdict {
        let b = qh.borel(report)?;
        (
            Some(b.arrows().map(|(i, j)| [i, j]).collect()),
            Some(b.generators().iter().map(ToString::to_string).collect()),
        )
    } else {
        (None, None)
    };
    Ok(BorelJson {
        verdict: report.verdict,
        sinks: report
            .sinks
            .iter()
            .map(|s| SinkJson { vertex: s.vertex, minimal: s.minimal, maximal: s.maximal })
            .collect(),
        witnesses: report
            .witnesses
            .iter()
            .map(|w| WitnessJson { vertex: w.vertex, blocking_standard: w.blocking })
            .collect(),
        arrows,
        generators,
    })
}

pub fn structure_report(qh: &LinearQh) -> Result<StructureReport> {
    let q = qh.quiver();
    let decon = qh.deconcatenation();
    let oracle = IntervalOracle::new(q);
    let ext = qh.ext_algebra()?;
    let existence = qh.borel_report(&oracle)?;
    let tilting = qh.tilting(&oracle)?;
    let n = qh.n();

    Ok(StructureReport {
        quiver: QuiverJson {
            n,
            orientation: q.orientation(),
            cuts: decon
                .cuts
                .iter()
                .map(|&(vertex, kind)| CutJson {
                    vertex,
                    kind: match kind {
                        CutKind::Sink => "sink",
                        CutKind::Source => "source",
                    },
                })
                .collect(),
        },
        segments: decon
            .segments
            .iter()
            .map(|s| SegmentJson {
                lo: s.lo,
                hi: s.hi,
                direction: match s.direction {
                    SegmentDirection::A => "A",
                    SegmentDirection::B => "B",
                },
            })
            .collect(),
        trees: qh.tables().iter().map(|t| t.tree().shape().to_string()).collect(),
        order: pairs(qh.order().covering_pairs()),
        essential_order: pairs(qh.essential_order().covering_pairs()),
        standard: intervals((1..=n).map(|i| (i, qh.standard(i)))),
        costandard: intervals((1..=n).map(|i| (i, qh.costandard(i)))),
        tilting: intervals((1..=n).zip(tilting)),
        ext_algebra: presentation_json(&ext)?,
        ringel_dual: qh.ringel_duals().iter().map(presentation_json).collect::<Result<_>>()?,
        borel: borel_json(qh, &existence)?,
        formality: formality_json(&ext.formality_check()?),
    })
}

pub fn structure_json(qh: &LinearQh) -> Result<String> {
    let report = structure_report(qh)?;
    Ok(serde_json::to_string_pretty(&report).expect("report serializes"))
}
