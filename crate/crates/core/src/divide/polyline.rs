//! Geometric ingestion: integer polylines in a disc become a combinatorial divide.
//!
//! All predicates are exact. Segment crossings are rational points; boundary
//! crossings are quadratic surds and are ordered by angle without rounding.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::geom::{circle_hit, cross, direction_cmp, dot, sign_surd, sub, SurdPoint, Vec2};
use super::{Diagnostics, Divide, DivideError, RawDivide, RawEdge, RawSeed, Side, Sign};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyBranch {
    pub points: Vec<(i64, i64)>,
    pub closed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolylineDivide {
    pub name: String,
    pub branches: Vec<PolyBranch>,
    pub disc_radius: i64,
    pub seed_point: (i64, i64),
    pub seed_sign: Sign,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    #[error("disc radius must be positive")]
    BadRadius,
    #[error("polyline {branch}: {reason}")]
    Placement { branch: usize, reason: String },
    #[error("polyline {branch}: degenerate segment at point {index}")]
    DegenerateSegment { branch: usize, index: usize },
    #[error("triple point at {0}")]
    TriplePoint(String),
    #[error("tangency or overlapping segments between polylines {a} and {b}")]
    Overlap { a: usize, b: usize },
    #[error("intersection at a polyline vertex at {0}")]
    VertexIntersection(String),
    #[error("intersection on the disc boundary at {0}")]
    OnBoundary(String),
    #[error("two terminals at the same boundary point")]
    TerminalCollision,
    #[error("closed polyline {0} meets no other curve")]
    IsolatedCircle(usize),
    #[error("witness point on a curve")]
    WitnessOnCurve,
    #[error("witness point outside the disc")]
    WitnessOutside,
    #[error("witness point could not be located")]
    WitnessUnlocatable,
}

struct Segment {
    branch: usize,
    index: usize,
    a: Vec2,
    b: Vec2,
}

impl Segment {
    fn dir(&self) -> Vec2 {
        sub(&self.b, &self.a)
    }
}

struct Crossing {
    segs: [usize; 2],
}

/// An event along a branch: a crossing passage at parameter `t` of a segment.
struct Event {
    seg_index: usize,
    t: BigRational,
    crossing: usize,
    which: usize,
}

fn big(p: (i64, i64)) -> Vec2 {
    (BigInt::from(p.0), BigInt::from(p.1))
}

fn fmt_point(x: &BigRational, y: &BigRational) -> String {
    format!("({x}, {y})")
}

fn norm2_rat(x: &BigRational, y: &BigRational) -> BigRational {
    x * x + y * y
}

fn geometry(e: GeometryError) -> Diagnostics {
    Diagnostics::single(DivideError::Geometry(e))
}

fn check_placement(input: &PolylineDivide) -> Result<(), GeometryError> {
    if input.disc_radius <= 0 {
        return Err(GeometryError::BadRadius);
    }
    let r2 = BigInt::from(input.disc_radius).pow(2);
    for (bi, br) in input.branches.iter().enumerate() {
        let n = br.points.len();
        let inside = |p: (i64, i64)| {
            let p = big(p);
            dot(&p, &p) < r2
        };
        let place = |reason: &str| GeometryError::Placement { branch: bi, reason: reason.into() };
        for i in 0..n {
            let j = if i + 1 == n {
                if br.closed { 0 } else { break }
            } else {
                i + 1
            };
            if br.points[i] == br.points[j] {
                return Err(GeometryError::DegenerateSegment { branch: bi, index: i });
            }
        }
        if br.closed {
            if n < 3 {
                return Err(place("closed polyline needs at least 3 points"));
            }
            if !br.points.iter().all(|&p| inside(p)) {
                return Err(place("closed polyline must lie strictly inside the disc"));
            }
            continue;
        }
        if n < 2 {
            return Err(place("open polyline needs at least 2 points"));
        }
        if inside(br.points[0]) || inside(br.points[n - 1]) || {
            let p = big(br.points[0]);
            let q = big(br.points[n - 1]);
            dot(&p, &p) == r2 || dot(&q, &q) == r2
        } {
            return Err(place("open polyline endpoints must lie strictly outside the disc"));
        }
        if !br.points[1..n - 1].iter().all(|&p| inside(p)) {
            return Err(place("interior points of an open polyline must lie strictly inside the disc"));
        }
        if n == 2 {
            // chord: nearest point of the line must be interior to the segment and to the disc
            let a = big(br.points[0]);
            let d = sub(&big(br.points[1]), &a);
            let aa = dot(&d, &d);
            let bb = dot(&a, &d);
            let cc = dot(&a, &a) - &r2;
            if !(bb.is_negative() && -&bb < aa) || (&bb * &bb - &aa * &cc) <= BigInt::zero() {
                return Err(place("two-point polyline does not pass through the disc"));
            }
        }
    }
    Ok(())
}

fn build_segments(input: &PolylineDivide) -> Vec<Segment> {
    let mut segs = Vec::new();
    for (bi, br) in input.branches.iter().enumerate() {
        let n = br.points.len();
        let count = if br.closed { n } else { n - 1 };
        for i in 0..count {
            segs.push(Segment { branch: bi, index: i, a: big(br.points[i]), b: big(br.points[(i + 1) % n]) });
        }
    }
    segs
}

fn adjacent(input: &PolylineDivide, s: &Segment, t: &Segment) -> bool {
    if s.branch != t.branch {
        return false;
    }
    let br = &input.branches[s.branch];
    let count = if br.closed { br.points.len() } else { br.points.len() - 1 };
    let (i, j) = (s.index.min(t.index), s.index.max(t.index));
    j == i + 1 || (br.closed && i == 0 && j == count - 1)
}

type RatPoint = (BigRational, BigRational);

fn point_at(s: &Segment, t: &BigRational) -> RatPoint {
    let d = s.dir();
    let x = BigRational::from_integer(s.a.0.clone()) + t * BigRational::from_integer(d.0);
    let y = BigRational::from_integer(s.a.1.clone()) + t * BigRational::from_integer(d.1);
    (x, y)
}

fn is_vertex_param(t: &BigRational) -> bool {
    t.is_zero() || t.is_one()
}

/// Finds every crossing inside the disc.
fn find_crossings(input: &PolylineDivide, segs: &[Segment]) -> Result<(Vec<Crossing>, Vec<Vec<Event>>), GeometryError> {
    let r2 = BigRational::from_integer(BigInt::from(input.disc_radius).pow(2));
    let mut crossings = Vec::new();
    let mut events: Vec<Vec<Event>> = input.branches.iter().map(|_| Vec::new()).collect();
    let mut seen: BTreeMap<RatPoint, usize> = BTreeMap::new();
    // touching errors wait until every pair is checked for overlaps
    let mut deferred: Option<GeometryError> = None;

    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            let (s, q) = (&segs[i], &segs[j]);
            let r = s.dir();
            let v = q.dir();
            let denom = cross(&r, &v);
            let ca = sub(&q.a, &s.a);
            if denom.is_zero() {
                if !cross(&ca, &r).is_zero() {
                    continue;
                }
                // collinear: overlap interval in the parameter of s
                let rr = dot(&r, &r);
                let t0 = BigRational::new(dot(&ca, &r), rr.clone());
                let t1 = BigRational::new(dot(&sub(&q.b, &s.a), &r), rr);
                let lo = t0.clone().min(t1.clone()).max(BigRational::zero());
                let hi = t0.max(t1).min(BigRational::one());
                match lo.cmp(&hi) {
                    Ordering::Greater => continue,
                    Ordering::Less => return Err(GeometryError::Overlap { a: s.branch, b: q.branch }),
                    Ordering::Equal => {
                        let p = point_at(s, &lo);
                        if norm2_rat(&p.0, &p.1) > r2 || adjacent(input, s, q) {
                            continue;
                        }
                        deferred.get_or_insert(GeometryError::VertexIntersection(fmt_point(&p.0, &p.1)));
                        continue;
                    }
                }
            }
            let t = BigRational::new(cross(&ca, &v), denom.clone());
            let u = BigRational::new(cross(&ca, &r), denom);
            let unit = BigRational::zero()..=BigRational::one();
            if !unit.contains(&t) || !unit.contains(&u) {
                continue;
            }
            let p = point_at(s, &t);
            let n2 = norm2_rat(&p.0, &p.1);
            match n2.cmp(&r2) {
                Ordering::Greater => continue,
                Ordering::Equal => {
                    deferred.get_or_insert(GeometryError::OnBoundary(fmt_point(&p.0, &p.1)));
                    continue;
                }
                Ordering::Less => {}
            }
            if is_vertex_param(&t) || is_vertex_param(&u) {
                if adjacent(input, s, q) && is_vertex_param(&t) && is_vertex_param(&u) {
                    continue;
                }
                deferred.get_or_insert(GeometryError::VertexIntersection(fmt_point(&p.0, &p.1)));
                continue;
            }
            if seen.insert(p.clone(), crossings.len()).is_some() {
                return Err(GeometryError::TriplePoint(fmt_point(&p.0, &p.1)));
            }
            let c = crossings.len();
            crossings.push(Crossing { segs: [i, j] });
            events[s.branch].push(Event { seg_index: s.index, t, crossing: c, which: 0 });
            events[q.branch].push(Event { seg_index: q.index, t: u, crossing: c, which: 1 });
        }
    }
    if let Some(e) = deferred {
        return Err(e);
    }
    for ev in events.iter_mut() {
        ev.sort_by(|x, y| x.seg_index.cmp(&y.seg_index).then_with(|| x.t.cmp(&y.t)));
    }
    Ok((crossings, events))
}

/// Slot numbers at a crossing for (strand, forward?) in counterclockwise order.
fn crossing_slots(segs: &[Segment], c: &Crossing) -> [[u8; 2]; 2] {
    let d0 = segs[c.segs[0]].dir();
    let d1 = segs[c.segs[1]].dir();
    let neg = |v: &Vec2| (-&v.0, -&v.1);
    let mut dirs = [(neg(&d0), 0usize, 1usize), (d0.clone(), 0, 0), (neg(&d1), 1, 1), (d1.clone(), 1, 0)];
    dirs.sort_by(|x, y| direction_cmp(&x.0, &y.0));
    let mut out = [[0u8; 2]; 2];
    for (slot, (_, which, back)) in dirs.iter().enumerate() {
        out[*which][*back] = slot as u8;
    }
    out
}

/// Where the seed's witness sits: on the left or right of a segment hit,
/// or in the boundary arc after terminal position `i`.
enum Witness {
    Segment { seg: usize, t: BigRational, left: bool },
    Arc(SurdPoint),
}

fn directions() -> Vec<Vec2> {
    let mut out = Vec::new();
    for m in 1i64..=9 {
        for x in -m..=m {
            for y in -m..=m {
                if x.abs().max(y.abs()) == m && num_integer::gcd(x, y) == 1 {
                    out.push((BigInt::from(x), BigInt::from(y)));
                }
            }
        }
    }
    out
}

fn locate_witness(input: &PolylineDivide, segs: &[Segment]) -> Result<Witness, GeometryError> {
    let w = big(input.seed_point);
    let r2 = BigInt::from(input.disc_radius).pow(2);
    if dot(&w, &w) >= r2 {
        return Err(GeometryError::WitnessOutside);
    }
    for s in segs {
        let r = s.dir();
        let wa = sub(&w, &s.a);
        if cross(&r, &wa).is_zero() && !dot(&wa, &r).is_negative() && dot(&wa, &r) <= dot(&r, &r) {
            return Err(GeometryError::WitnessOnCurve);
        }
    }
    'dir: for v in directions() {
        // circle exit: s_c = (-(w.v) + sqrt(disc)) / |v|^2
        let vv = dot(&v, &v);
        let wv = dot(&w, &v);
        let disc = &wv * &wv - &vv * (dot(&w, &w) - &r2);
        let mut best: Option<(BigRational, usize, BigRational)> = None;
        let mut tie = false;
        for (si, s) in segs.iter().enumerate() {
            let r = s.dir();
            let denom = cross(&v, &r);
            let aw = sub(&s.a, &w);
            if denom.is_zero() {
                if cross(&aw, &v).is_zero() {
                    continue 'dir;
                }
                continue;
            }
            let sp = BigRational::new(cross(&aw, &r), denom.clone());
            let t = BigRational::new(cross(&aw, &v), denom);
            if !sp.is_positive() || t.is_negative() || t > BigRational::one() {
                continue;
            }
            // only hits before the circle exit count
            let (n, m) = (sp.numer().clone(), sp.denom().clone());
            if sign_surd(&(-&wv * &m - &n * &vv), &m, &disc) <= 0 {
                continue;
            }
            if is_vertex_param(&t) {
                continue 'dir;
            }
            match &best {
                Some((b, ..)) if *b < sp => {}
                Some((b, ..)) if *b == sp => tie = true,
                _ => {
                    tie = false;
                    best = Some((sp, si, t));
                }
            }
        }
        if tie {
            continue;
        }
        return Ok(match best {
            Some((_, si, t)) => {
                let s = &segs[si];
                let left = cross(&s.dir(), &sub(&w, &s.a)).is_positive();
                Witness::Segment { seg: si, t, left }
            }
            None => {
                let target = (&w.0 + &v.0, &w.1 + &v.1);
                match circle_hit(&w, &target, &BigInt::from(input.disc_radius), false) {
                    Some((p, ..)) => Witness::Arc(p),
                    None => continue,
                }
            }
        });
    }
    Err(GeometryError::WitnessUnlocatable)
}

/// Turns integer polylines into a validated combinatorial divide.
pub fn ingest_polyline(input: &PolylineDivide) -> Result<Divide, Diagnostics> {
    check_placement(input).map_err(geometry)?;
    let segs = build_segments(input);
    let (crossings, events) = find_crossings(input, &segs).map_err(geometry)?;
    let slots: Vec<[[u8; 2]; 2]> = crossings.iter().map(|c| crossing_slots(&segs, c)).collect();

    // double point ids by first encounter along the branches
    let mut dp_id: Vec<Option<usize>> = vec![None; crossings.len()];
    let mut next_dp = 0;
    for ev in &events {
        for e in ev {
            if dp_id[e.crossing].is_none() {
                dp_id[e.crossing] = Some(next_dp);
                next_dp += 1;
            }
        }
    }

    // terminals sorted by angle of their boundary point
    let radius = BigInt::from(input.disc_radius);
    let mut term_points: Vec<(SurdPoint, usize, usize)> = Vec::new();
    for (bi, br) in input.branches.iter().enumerate() {
        if br.closed {
            continue;
        }
        let n = br.points.len();
        let (p0, ..) = circle_hit(&big(br.points[0]), &big(br.points[1]), &radius, true).expect("placement checked");
        let (p1, ..) =
            circle_hit(&big(br.points[n - 2]), &big(br.points[n - 1]), &radius, false).expect("placement checked");
        term_points.push((p0, bi, 0));
        term_points.push((p1, bi, 1));
    }
    term_points.sort_by(|x, y| x.0.angle_cmp(&y.0));
    for w in term_points.windows(2) {
        if w[0].0.angle_cmp(&w[1].0) == Ordering::Equal {
            return Err(geometry(GeometryError::TerminalCollision));
        }
    }
    let mut term_of: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (pos, (_, bi, end)) in term_points.iter().enumerate() {
        term_of.insert((*bi, *end), pos);
    }

    let dp_name = |c: usize| format!("p{}", dp_id[c].unwrap() + 1);
    let term_name = |pos: usize| format!("t{}", pos + 1);

    let mut edges: Vec<RawEdge> = Vec::new();
    let mut branch_edges: Vec<Vec<usize>> = Vec::new();
    for (bi, br) in input.branches.iter().enumerate() {
        let ev = &events[bi];
        let mut ids = Vec::new();
        let mut push = |edges: &mut Vec<RawEdge>, from: (String, u8), to: (String, u8)| {
            ids.push(edges.len());
            let id = format!("e{}", edges.len() + 1);
            edges.push(RawEdge { id, ends: [from, to] });
        };
        let out_end = |e: &Event| (dp_name(e.crossing), slots[e.crossing][e.which][0]);
        let in_end = |e: &Event| (dp_name(e.crossing), slots[e.crossing][e.which][1]);
        if br.closed {
            if ev.is_empty() {
                return Err(geometry(GeometryError::IsolatedCircle(bi)));
            }
            for k in 0..ev.len() {
                push(&mut edges, out_end(&ev[k]), in_end(&ev[(k + 1) % ev.len()]));
            }
        } else {
            let start = (term_name(term_of[&(bi, 0)]), 0u8);
            let end = (term_name(term_of[&(bi, 1)]), 0u8);
            let mut prev = start;
            for e in ev {
                push(&mut edges, prev, in_end(e));
                prev = out_end(e);
            }
            push(&mut edges, prev, end);
        }
        branch_edges.push(ids);
    }

    let seed = match locate_witness(input, &segs).map_err(geometry)? {
        Witness::Segment { seg, t, left } => {
            let s = &segs[seg];
            let ev = &events[s.branch];
            let before = ev
                .iter()
                .filter(|e| (e.seg_index, &e.t) < (s.index, &t))
                .count();
            let k = if input.branches[s.branch].closed {
                (before + ev.len() - 1) % ev.len()
            } else {
                before
            };
            let e = branch_edges[s.branch][k];
            RawSeed { edge: edges[e].id.clone(), side: if left { Side::Left } else { Side::Right }, sign: input.seed_sign }
        }
        Witness::Arc(p) => {
            // arc from terminal i to i + 1 containing p; the face continues out of terminal i + 1
            let k = term_points.len();
            if term_points.iter().any(|t| t.0.angle_cmp(&p) == Ordering::Equal) {
                return Err(geometry(GeometryError::WitnessUnlocatable));
            }
            let i = term_points
                .iter()
                .rposition(|t| t.0.angle_cmp(&p) == Ordering::Less)
                .unwrap_or(k - 1);
            let name = term_name((i + 1) % k);
            let (e, end) = edges
                .iter()
                .enumerate()
                .find_map(|(ei, e)| e.ends.iter().position(|x| x.0 == name).map(|end| (ei, end)))
                .expect("terminal has an edge");
            RawSeed {
                edge: edges[e].id.clone(),
                side: if end == 0 { Side::Left } else { Side::Right },
                sign: input.seed_sign,
            }
        }
    };

    let raw = RawDivide {
        name: input.name.clone(),
        double_points: (0..next_dp).map(|i| format!("p{}", i + 1)).collect(),
        terminals: (0..term_points.len()).map(term_name).collect(),
        edges: edges.clone(),
        branches: branch_edges
            .iter()
            .map(|ids| ids.iter().map(|&e| edges[e].id.clone()).collect())
            .collect(),
        sign_seed: seed,
    };
    Divide::from_raw(raw)
}
