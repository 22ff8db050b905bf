use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::fs;
use std::path::Path;

use cyclecreate::bounds::exponent_table;
use cyclecreate::constructions::{
    choose_plane_order, lower_bound_family, projective_plane_incidence, validate_c2kfree_bipartite_regular,
};
use cyclecreate::counting::{count_perfect_matchings, lemma6_check, permanent_ryser};
use cyclecreate::io;
use cyclecreate::reduction::{associated_triple, ground_set_reduce, paths_to_matchings as reduce_paths, verify_claim_notused};
use cyclecreate::search::{
    enumerate_permutations, exact_h, exact_m, exact_rp, is_reversing, perm_to_matching, EnumLimits,
};
use cyclecreate::{is_creating, verify_pairwise_creating, Error, FamilyReport, HamPath, PerfectMatching};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::manifest::sha256_hex;
use crate::{Kind, Quantity};

/// Everything a command produced, for printing and for the manifest.
#[derive(Debug, Default)]
pub struct Report {
    pub stdout: String,
    /// A checked property failed; the witness is in `stdout`.
    pub violated: bool,
    pub inputs: BTreeMap<String, String>,
    pub outputs: BTreeMap<String, String>,
}

impl Report {
    fn read(&mut self, path: &Path) -> Result<String, CliError> {
        let text = fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
        self.inputs.insert(path.display().to_string(), sha256_hex(text.as_bytes()));
        Ok(text)
    }

    fn write(&mut self, path: &Path, text: &str) -> Result<(), CliError> {
        fs::write(path, text).map_err(|e| CliError::Io(path.display().to_string(), e))?;
        self.outputs.insert(path.display().to_string(), sha256_hex(text.as_bytes()));
        Ok(())
    }

    fn line(&mut self, s: impl fmt::Display) {
        writeln!(self.stdout, "{s}").unwrap();
    }
}

/// Failures that map to exit code 2.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String, std::io::Error),
    Lib(Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Io(path, e) => write!(f, "{path}: {e}"),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

type Res = Result<Report, CliError>;

fn with_decimal<T: ToPrimitive>(exact: impl fmt::Display, approx: &T, decimal: bool) -> String {
    match (decimal, approx.to_f64()) {
        (true, Some(x)) => format!("{exact} ({x:.6})"),
        _ => exact.to_string(),
    }
}

fn join<T: fmt::Display>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

pub fn construct_lower_bound(n: usize, k: usize, out: &Path) -> Res {
    let fam = lower_bound_family(n, k)?;
    let mut r = Report::default();
    r.write(out, &io::write_paths(n, &fam))?;
    r.line(format_args!("wrote {} paths on {n} vertices", fam.len()));
    Ok(r)
}

pub fn construct_plane(q: Option<usize>, target_n: Option<usize>, out: &Path) -> Res {
    let q = match (q, target_n) {
        (Some(q), None) => q,
        (None, Some(t)) => choose_plane_order(t)?.0,
        _ => return Err(CliError::Usage("give exactly one of --q and --target-n".into())),
    };
    let p = projective_plane_incidence(q)?;
    let mut r = Report::default();
    r.write(out, &io::write_graph(&p.graph))?;
    r.line(format_args!(
        "q {q}: {} vertices, {} edges, points 1..={}, lines {}..={}",
        p.graph.n(),
        p.graph.edge_count(),
        p.class_size(),
        p.class_size() + 1,
        2 * p.class_size()
    ));
    Ok(r)
}

fn report_family<T>(r: &mut Report, fam: &[T], rep: &FamilyReport, show: impl Fn(&T) -> String) {
    match rep.first_noncreating {
        None => r.line(format_args!(
            "verified: {} members, {} pairs, all C_{}-creating",
            rep.family_size, rep.pairs_checked, rep.cycle_length
        )),
        Some((i, j)) => {
            r.violated = true;
            r.line(format_args!(
                "violation: members {} and {} are not C_{}-creating ({} of {} pairs fail)",
                i + 1,
                j + 1,
                rep.cycle_length,
                rep.pairs_checked - rep.creating_pairs,
                rep.pairs_checked
            ));
            r.line(show(&fam[i]));
            r.line(show(&fam[j]));
        }
    }
}

fn show_path(h: &HamPath) -> String {
    join(h.order(), " ")
}

fn show_matching(m: &PerfectMatching) -> String {
    join(m.pairs().iter().map(|(a, b)| format!("{a}-{b}")), " ")
}

pub fn verify_creating(k: usize, kind: Kind, input: &Path) -> Res {
    let mut r = Report::default();
    let text = r.read(input)?;
    match kind {
        Kind::Paths => {
            let (_, fam) = io::parse_paths(&text)?;
            let rep = verify_pairwise_creating(&fam, 2 * k)?;
            report_family(&mut r, &fam, &rep, show_path);
        }
        Kind::Matchings => {
            let (_, fam) = io::parse_matchings(&text)?;
            let rep = verify_pairwise_creating(&fam, 2 * k)?;
            report_family(&mut r, &fam, &rep, show_matching);
        }
    }
    Ok(r)
}

pub fn verify_c2kfree(k: usize, input: &Path) -> Res {
    let mut r = Report::default();
    let g = io::parse_graph(&r.read(input)?)?;
    let rep = validate_c2kfree_bipartite_regular(&g, k);
    let show = |x: Option<usize>| x.map_or("none".to_string(), |v| v.to_string());
    r.line(format_args!(
        "n {} bipartite {} degree {} girth {}",
        rep.n,
        rep.bipartite,
        show(rep.degree),
        show(rep.girth)
    ));
    if rep.passed() {
        r.line(format_args!("verified: bipartite, regular, no cycle of length <= {}", 2 * k));
        return Ok(r);
    }
    r.violated = true;
    if let Some(girth) = rep.girth.filter(|&g| g <= 2 * k) {
        let cycle = &g.cycles_of_length(girth)[0];
        r.line(format_args!("violation: cycle of length {girth}: {}", join(cycle, " ")));
    } else if rep.degree.is_none() && g.n() > 0 {
        let v = (2..=g.n()).find(|&v| g.degree(v) != g.degree(1)).unwrap_or(1);
        r.line(format_args!(
            "violation: vertex 1 has degree {}, vertex {v} has degree {}",
            g.degree(1),
            g.degree(v)
        ));
    } else {
        r.line("violation: graph is not bipartite");
    }
    Ok(r)
}

pub fn paths_to_matchings(k: usize, input: &Path, out: &Path) -> Res {
    let mut r = Report::default();
    let (_, fam) = io::parse_paths(&r.read(input)?)?;
    let red = reduce_paths(&fam, k)?;
    let ms = &red.matchings;
    r.write(out, &io::write_matchings(ms.ground_size(), &ms.matchings))?;
    r.line(format_args!("input {} paths, {} distinct triples", fam.len(), red.distinct_triples));
    r.line(format_args!("largest triple class {} paths", red.class_size));
    r.line(format_args!(
        "endpoints {} {}: {} paths kept",
        red.endpoints.0,
        red.endpoints.1,
        red.members.len()
    ));
    r.line(format_args!("members {}", join(red.members.iter().map(|i| i + 1), " ")));
    r.line(format_args!("{} matchings on {} vertices", ms.matchings.len(), ms.ground_size()));
    r.line(format_args!("labels {}", join(&ms.original_labels, " ")));
    Ok(r)
}

pub fn shrink(input: &Path, out: &Path) -> Res {
    let mut r = Report::default();
    let (_, fam) = io::parse_matchings(&r.read(input)?)?;
    let s = ground_set_reduce(&fam)?;
    let ms = &s.matchings;
    r.write(out, &io::write_matchings(ms.ground_size(), &ms.matchings))?;
    r.line(format_args!("partner of 1: {}", s.partner));
    r.line(format_args!("kept {} of {} matchings on {} vertices", ms.matchings.len(), fam.len(), ms.ground_size()));
    r.line(format_args!("members {}", join(s.kept.iter().map(|i| i + 1), " ")));
    r.line(format_args!("labels {}", join(&ms.original_labels, " ")));
    Ok(r)
}

pub fn search(quantity: Quantity, n: usize, k: Option<usize>) -> Res {
    let limits = EnumLimits::from_env();
    let need_k = || k.ok_or_else(|| CliError::Usage("--k is required for H and M".into()));
    let mut r = Report::default();
    match quantity {
        Quantity::H => {
            let len = need_k()?;
            let opt = exact_h(n, len, limits)?;
            let all = cyclecreate::search::enumerate_ham_paths(n)?;
            let fam: Vec<HamPath> = opt.witness.iter().map(|&i| all[i].clone()).collect();
            r.line(opt.size);
            r.stdout.push_str(&io::write_paths(n, &fam));
        }
        Quantity::M => {
            let half = need_k()?;
            let opt = exact_m(n, half, limits)?;
            let all = cyclecreate::search::enumerate_perfect_matchings(n)?;
            let fam: Vec<PerfectMatching> = opt.witness.iter().map(|&i| all[i].clone()).collect();
            r.line(opt.size);
            r.stdout.push_str(&io::write_matchings(n, &fam));
        }
        Quantity::Rp => {
            if k.is_some() {
                return Err(CliError::Usage("--k does not apply to RP".into()));
            }
            let opt = exact_rp(n, limits)?;
            let all = enumerate_permutations(n)?;
            r.line(opt.size);
            for &i in &opt.witness {
                r.line(join(all[i].images(), " "));
            }
        }
    }
    Ok(r)
}

pub fn count_matchings(input: &Path) -> Res {
    let mut r = Report::default();
    let g = io::parse_graph(&r.read(input)?)?;
    r.line(count_perfect_matchings(&g)?);
    Ok(r)
}

pub fn count_permanent(input: &Path) -> Res {
    let mut r = Report::default();
    let a = io::parse_matrix(&r.read(input)?)?;
    r.line(permanent_ryser(&a));
    Ok(r)
}

pub fn check_lemma6(input: &Path, decimal: bool) -> Res {
    let mut r = Report::default();
    let g = io::parse_graph(&r.read(input)?)?;
    let rep = lemma6_check(&g)?;
    r.line(format_args!("class size {} degree {}", rep.m, rep.r));
    r.line(format_args!("matchings {}", rep.matchings));
    r.line(format_args!("lower bound {}", with_decimal(&rep.lower_bound, &rep.lower_bound, decimal)));
    r.line(format_args!("integer bound {}", rep.integer_bound()));
    r.line(format_args!(
        "scaled permanent {}",
        with_decimal(&rep.scaled_permanent, &rep.scaled_permanent, decimal)
    ));
    if rep.holds() {
        r.line("verified: matchings >= lower bound");
    } else {
        r.violated = true;
        r.line("violation: matchings below lower bound");
    }
    Ok(r)
}

pub fn check_claim4(k: usize, input: &Path) -> Res {
    let mut r = Report::default();
    let (_, fam) = io::parse_paths(&r.read(input)?)?;
    let triples = fam.iter().map(|h| associated_triple(h, k)).collect::<Result<Vec<_>, _>>()?;
    let mut sharing = 0;
    for i in 0..fam.len() {
        for j in i + 1..fam.len() {
            if triples[i] != triples[j] {
                continue;
            }
            sharing += 1;
            if !verify_claim_notused(&fam[i], &fam[j], k)? {
                r.violated = true;
                r.line(format_args!("violation: members {} and {} have a {}-cycle through a fixed edge", i + 1, j + 1, 2 * k));
                r.line(show_path(&fam[i]));
                r.line(show_path(&fam[j]));
                return Ok(r);
            }
        }
    }
    r.line(format_args!("verified: {sharing} sharing pairs, no {}-cycle uses a fixed edge", 2 * k));
    Ok(r)
}

pub fn check_claim7(m: usize) -> Res {
    let perms = enumerate_permutations(m)?;
    let mut r = Report::default();
    for a in &perms {
        for b in &perms {
            let rev = is_reversing(a, b)?;
            let cre = is_creating(&perm_to_matching(a), &perm_to_matching(b), 4)?;
            if rev != cre {
                r.violated = true;
                r.line(format_args!(
                    "violation: {} / {}: reversing {rev}, creating {cre}",
                    join(a.images(), " "),
                    join(b.images(), " ")
                ));
                return Ok(r);
            }
        }
    }
    r.line(format_args!("verified: {} ordered pairs agree", perms.len() * perms.len()));
    Ok(r)
}

pub fn bounds(k: usize, kmax: Option<usize>, decimal: bool) -> Res {
    let kmax = kmax.unwrap_or(k);
    if kmax < k {
        return Err(CliError::Usage(format!("--kmax {kmax} is below --k {k}")));
    }
    let rows = exponent_table::<BigInt>(k, kmax)?;
    let show = |x: &BigRational| with_decimal(x, x, decimal);
    let mut r = Report::default();
    for row in &rows {
        r.line(format_args!(
            "k {} source {} degree {} lower {} matching {} path {}",
            row.k,
            row.source,
            show(&row.degree),
            show(&row.path_lower),
            show(&row.matching_upper),
            show(&row.path_upper)
        ));
    }
    Ok(r)
}
