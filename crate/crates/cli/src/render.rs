//! Plain-text reports.

use std::fmt::Write;

use chordcone::{
    Homogeneity, MembershipCertificate, MembershipVerdict, RankOneTerm, RankReport, SpectrumCheck,
};

use super::Analysis;

pub fn nodes(v: &[usize]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn set(v: &[usize]) -> String {
    format!(
        "{{{}}}",
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    )
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn analysis(a: &Analysis) -> String {
    let mut s = String::new();
    match a {
        Analysis::NotChordal { file, cycle, .. } => {
            writeln!(s, "{file}: not chordal").unwrap();
            writeln!(s, "  chordless cycle: {}", nodes(cycle)).unwrap();
        }
        Analysis::Chordal {
            file,
            peo,
            cliques,
            homogeneity,
            report: r,
            minimality,
            ..
        } => {
            writeln!(s, "{file}: chordal, {} nodes, {} edges", r.n, r.edges).unwrap();
            writeln!(s, "  perfect elimination order: {}", nodes(peo)).unwrap();
            let list: Vec<String> = cliques.iter().map(|c| set(c)).collect();
            writeln!(
                s,
                "  maximal cliques ({}): {}",
                cliques.len(),
                list.join(" ")
            )
            .unwrap();
            let hom = match homogeneity {
                Homogeneity::Homogeneous => "yes".to_string(),
                Homogeneity::InducedPath(p) => format!("no, induced path {}", nodes(p)),
                Homogeneity::ChordlessCycle(c) => format!("no, chordless cycle {}", nodes(c)),
            };
            writeln!(s, "  homogeneous chordal: {hom}").unwrap();
            writeln!(
                s,
                "  minimal polynomial degree: {} (minimal: {}, {} boundary witnesses)",
                r.min_degree,
                yes_no(minimality.minimal),
                minimality.witnesses.len()
            )
            .unwrap();
            if let (Some(rank), Some(gap)) = (r.hom_rank, r.barrier_gap) {
                writeln!(s, "  homogeneous rank: {rank}, barrier gap {gap}").unwrap();
            }
            match r.rog_witness {
                Some(v) => writeln!(
                    s,
                    "  ROG realizable: no (node {v} lies in several maximal cliques)"
                )
                .unwrap(),
                None => writeln!(s, "  ROG realizable: {}", yes_no(r.rog_realizable)).unwrap(),
            }
            let sat = if r.bound_exponential_saturated {
                " (saturated)"
            } else {
                ""
            };
            writeln!(
                s,
                "  bounds: quadratic {}, exponential {}{sat}, dimension {}",
                r.bound_quadratic, r.bound_exponential, r.bound_dimension
            )
            .unwrap();
            for note in &r.notes {
                writeln!(s, "  note: {note}").unwrap();
            }
        }
    }
    s
}

fn check(c: &SpectrumCheck) -> String {
    format!(
        "{:?}, min eigenvalue {:.6e} (threshold {:.1e})",
        c.definiteness, c.min_eigenvalue, c.threshold
    )
}

pub fn verdict(v: &MembershipVerdict) -> String {
    let mut s = format!("{:?}\n", v.status);
    match &v.certificate {
        MembershipCertificate::Full(c) => writeln!(s, "  full matrix: {}", check(c)).unwrap(),
        MembershipCertificate::Cliques(cs) => {
            for c in cs {
                writeln!(s, "  clique {}: {}", set(&c.clique), check(&c.check)).unwrap();
            }
        }
    }
    s
}

pub fn rank(r: &RankReport) -> String {
    let mut s = format!("rank {}\n", r.rank);
    let roots: Vec<String> = r.roots.iter().map(|t| format!("{t:.6e}")).collect();
    writeln!(s, "  roots: {}", roots.join(" ")).unwrap();
    writeln!(
        s,
        "  all nonnegative: {}, all positive: {}",
        yes_no(r.all_nonnegative),
        yes_no(r.all_positive)
    )
    .unwrap();
    s
}

pub fn decomposition(terms: &[RankOneTerm], max_error: f64) -> String {
    let mut s = format!(
        "{} rank-one terms, reconstruction error {max_error:.1e}\n",
        terms.len()
    );
    for t in terms {
        let v: Vec<String> = t
            .clique
            .iter()
            .map(|&i| format!("{:.6}", t.vector[i - 1]))
            .collect();
        writeln!(s, "  clique {}: {}", set(&t.clique), v.join(" ")).unwrap();
    }
    s
}
