//! Symbolic graph families, their text syntax, and deterministic builders.
//!
//! Vertex numbering per family:
//! - `path:n`, `cycle:n`, `complete:n`: `0..n` along the path/cycle.
//! - `ladder:n`: rail `u0..u(n-1)` then rail `v0..v(n-1)`; rung `ui vi`.
//! - `tent:n`: path `b1..bn` as vertices `0..n`, apex last.
//! - `lforest:a1,a2,…`: the `a1` paths of order 1, then the `a2` of order 2, ….
//! - `cluster:n1,n2,…` and `multipartite:n1,n2,…`: the `n1` blocks of size 1,
//!   then the `n2` blocks of size 2, …; each vertex labeled `K{size}.{index}`.

use std::fmt;

use super::Graph;
use crate::error::{Error, Result};

/// A graph family instance.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Ladder(usize),
    Tent(usize),
    /// Counts of paths by order: entry `i` counts paths on `i + 1` vertices.
    LinearForest(Vec<usize>),
    /// Counts of cliques by order: entry `i` counts cliques on `i + 1` vertices.
    Cluster(Vec<usize>),
    /// Counts of parts by size: entry `i` counts parts of size `i + 1`.
    Multipartite(Vec<usize>),
    ComplementOf(Box<FamilySpec>),
    UnionOf(Vec<FamilySpec>),
}

impl FamilySpec {
    /// Complement, folding the cluster/multipartite duality and double complements.
    pub fn complement(self) -> FamilySpec {
        match self {
            FamilySpec::Cluster(c) => FamilySpec::Multipartite(c),
            FamilySpec::Multipartite(c) => FamilySpec::Cluster(c),
            FamilySpec::Complete(n) => FamilySpec::Cluster(vec![n, 0, 0]),
            FamilySpec::ComplementOf(inner) => *inner,
            other => FamilySpec::ComplementOf(Box::new(other)),
        }
    }

    /// Checks parameter ranges and arities.
    pub fn validate(&self) -> Result<()> {
        let range = |msg: String| Err(Error::InvalidSpec(msg));
        match self {
            FamilySpec::Path(n) if *n < 1 => range(format!("path needs n >= 1, got {n}")),
            FamilySpec::Cycle(n) if *n < 3 => range(format!("cycle needs n >= 3, got {n}")),
            FamilySpec::Complete(n) if *n < 1 => range(format!("complete needs n >= 1, got {n}")),
            FamilySpec::Ladder(n) if *n < 1 => range(format!("ladder needs n >= 1, got {n}")),
            FamilySpec::Tent(n) if *n < 1 => range(format!("tent needs n >= 1, got {n}")),
            FamilySpec::LinearForest(c) if c.iter().sum::<usize>() < 1 => {
                range("lforest needs at least one path".into())
            }
            FamilySpec::Cluster(c) if c.iter().sum::<usize>() < 1 => range("cluster needs at least one clique".into()),
            FamilySpec::Multipartite(c) if c.iter().sum::<usize>() < 1 => {
                range("multipartite needs at least one part".into())
            }
            FamilySpec::ComplementOf(inner) => inner.validate(),
            FamilySpec::UnionOf(parts) if parts.is_empty() => range("union needs a member".into()),
            FamilySpec::UnionOf(parts) => parts.iter().try_for_each(FamilySpec::validate),
            _ => Ok(()),
        }
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, kind: &str, xs: &[usize]) -> fmt::Result {
    write!(f, "{kind}:")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Ladder(n) => write!(f, "ladder:{n}"),
            FamilySpec::Tent(n) => write!(f, "tent:{n}"),
            FamilySpec::LinearForest(c) => write_list(f, "lforest", c),
            FamilySpec::Cluster(c) => write_list(f, "cluster", c),
            FamilySpec::Multipartite(c) => write_list(f, "multipartite", c),
            FamilySpec::ComplementOf(inner) => write!(f, "complement({inner})"),
            FamilySpec::UnionOf(parts) => {
                f.write_str("union(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("; ")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl std::str::FromStr for FamilySpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_family_spec(s)
    }
}

/// Parses the family grammar:
///
/// ```text
/// spec := kind ':' int (',' int)*
///       | 'complement' '(' spec ')'
///       | 'union' '(' spec (';' spec)* ')'
/// kind := path | cycle | complete | ladder | tent | lforest | cluster | multipartite
/// ```
///
/// Whitespace is ignored. Complements are resolved (`complement(cluster:…)`
/// becomes `multipartite:…`).
pub fn parse_family_spec(text: &str) -> Result<FamilySpec> {
    let mut p = Parser { src: text, pos: 0 };
    let spec = p.spec()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.error("trailing input"));
    }
    spec.validate()?;
    Ok(spec)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::SpecParse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn word(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek() {
            if !c.is_ascii_alphabetic() {
                break;
            }
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a nonnegative integer"));
        }
        self.src[start..self.pos].parse().map_err(|_| Error::SpecParse {
            pos: start,
            msg: "integer too large".into(),
        })
    }

    fn int_list(&mut self) -> Result<Vec<usize>> {
        let mut xs = vec![self.int()?];
        loop {
            self.skip_ws();
            if self.peek() == Some(',') {
                self.pos += 1;
                xs.push(self.int()?);
            } else {
                return Ok(xs);
            }
        }
    }

    fn spec(&mut self) -> Result<FamilySpec> {
        self.skip_ws();
        let start = self.pos;
        let kind = self.word().to_ascii_lowercase();
        match kind.as_str() {
            "complement" => {
                self.expect('(')?;
                let inner = self.spec()?;
                self.expect(')')?;
                return Ok(inner.complement());
            }
            "union" => {
                self.expect('(')?;
                let mut parts = vec![self.spec()?];
                loop {
                    self.skip_ws();
                    if self.peek() == Some(';') {
                        self.pos += 1;
                        parts.push(self.spec()?);
                    } else {
                        break;
                    }
                }
                self.expect(')')?;
                return Ok(FamilySpec::UnionOf(parts));
            }
            "" => return Err(self.error("expected a family name")),
            _ => {}
        }
        self.expect(':')?;
        let list_pos = self.pos;
        let xs = self.int_list()?;
        let arity = |want: &str| Error::SpecParse {
            pos: list_pos,
            msg: format!("{kind} takes {want}, got {} parameters", xs.len()),
        };
        let single = |xs: &[usize]| {
            if xs.len() == 1 {
                Ok(xs[0])
            } else {
                Err(arity("one parameter"))
            }
        };
        let spec = match kind.as_str() {
            "path" => FamilySpec::Path(single(&xs)?),
            "cycle" => FamilySpec::Cycle(single(&xs)?),
            "complete" => FamilySpec::Complete(single(&xs)?),
            "ladder" => FamilySpec::Ladder(single(&xs)?),
            "tent" => FamilySpec::Tent(single(&xs)?),
            "lforest" => FamilySpec::LinearForest(xs),
            "cluster" | "multipartite" => {
                if xs.len() < 3 {
                    return Err(arity("at least three counts"));
                }
                if kind == "cluster" {
                    FamilySpec::Cluster(xs)
                } else {
                    FamilySpec::Multipartite(xs)
                }
            }
            _ => {
                return Err(Error::SpecParse {
                    pos: start,
                    msg: format!("unknown family {kind:?}"),
                })
            }
        };
        Ok(spec)
    }
}

fn path_graph(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges in range")
}

/// Blocks of sizes `1, 2, …` with multiplicities `counts`, as vertex ranges.
pub(crate) fn blocks(counts: &[usize]) -> Vec<(usize, std::ops::Range<usize>)> {
    let mut out = Vec::new();
    let mut next = 0;
    for (i, &c) in counts.iter().enumerate() {
        let size = i + 1;
        for _ in 0..c {
            out.push((size, next..next + size));
            next += size;
        }
    }
    out
}

fn cluster_graph(counts: &[usize]) -> Graph {
    let bl = blocks(counts);
    let n = bl.last().map_or(0, |(_, r)| r.end);
    let mut g = Graph::empty(n);
    let mut index = vec![0usize; counts.len() + 1];
    for (size, range) in bl {
        index[size] += 1;
        for u in range.clone() {
            g.set_label(u, format!("K{size}.{}", index[size]));
            for v in u + 1..range.end {
                g.insert_edge(u, v);
            }
        }
    }
    g
}

/// Builds the labeled graph for a validated spec.
pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    Ok(match spec {
        FamilySpec::Path(n) => path_graph(*n),
        FamilySpec::Cycle(n) => {
            let mut g = path_graph(*n);
            g.insert_edge(0, n - 1);
            g
        }
        FamilySpec::Complete(n) => Graph::complete(*n),
        FamilySpec::Ladder(n) => {
            let n = *n;
            let mut g = Graph::empty(2 * n);
            for i in 0..n {
                g.insert_edge(i, n + i);
                if i + 1 < n {
                    g.insert_edge(i, i + 1);
                    g.insert_edge(n + i, n + i + 1);
                }
                g.set_label(i, format!("u{i}"));
                g.set_label(n + i, format!("v{i}"));
            }
            g
        }
        FamilySpec::Tent(n) => {
            let n = *n;
            let mut g = Graph::from_edges(n + 1, (1..n).map(|i| (i - 1, i)).chain((0..n).map(|i| (i, n))))?;
            for i in 0..n {
                g.set_label(i, format!("b{}", i + 1));
            }
            g.set_label(n, "apex");
            g
        }
        FamilySpec::LinearForest(counts) => {
            let paths: Vec<Graph> = blocks(counts).into_iter().map(|(size, _)| path_graph(size)).collect();
            Graph::disjoint_union(&paths)
        }
        FamilySpec::Cluster(counts) => cluster_graph(counts),
        FamilySpec::Multipartite(counts) => cluster_graph(counts).complement(),
        FamilySpec::ComplementOf(inner) => build_family(inner)?.complement(),
        FamilySpec::UnionOf(parts) => {
            let gs = parts.iter().map(build_family).collect::<Result<Vec<_>>>()?;
            Graph::disjoint_union(&gs)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> Graph {
        build_family(&parse_family_spec(s).unwrap()).unwrap()
    }

    #[test]
    fn builder_examples() {
        let p4 = build("path:4");
        assert_eq!(p4.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
        let ladder = build("ladder:3");
        assert_eq!((ladder.order(), ladder.size()), (6, 7));
        let cl = build("cluster:1,1,1");
        assert_eq!((cl.order(), cl.size()), (6, 4));
        assert_eq!(cl.label(5), Some("K3.1"));
        let tent = build("tent:4");
        assert_eq!((tent.order(), tent.size()), (5, 7));
        assert_eq!(tent.degree(4), 4);
        assert_eq!(build("cycle:5").size(), 5);
        assert_eq!(build("lforest:1,2").order(), 5);
    }

    #[test]
    fn closed_form_edge_counts() {
        for n in 1..12 {
            assert_eq!(build(&format!("ladder:{n}")).size(), 3 * n - 2);
            assert_eq!(build(&format!("tent:{n}")).size(), 2 * n - 1);
        }
        for n1 in 0..3 {
            for n2 in 0..3 {
                for n3 in 0..4 {
                    if n1 + n2 + n3 == 0 {
                        continue;
                    }
                    let c = build(&format!("cluster:{n1},{n2},{n3}"));
                    assert_eq!(c.size(), n2 + 3 * n3);
                    let m = build(&format!("multipartite:{n1},{n2},{n3}"));
                    let total = n1 + 2 * n2 + 3 * n3;
                    assert_eq!(m.size(), total * (total - 1) / 2 - c.size());
                }
            }
        }
    }

    #[test]
    fn complement_of_cluster_is_multipartite() {
        let m = build("multipartite:1,1,1");
        assert_eq!(m.size(), 11);
        assert_eq!(build("cluster:1,1,1").complement(), m);
        assert_eq!(
            parse_family_spec("complement(cluster:0,0,2)").unwrap(),
            FamilySpec::Multipartite(vec![0, 0, 2])
        );
        assert_eq!(
            parse_family_spec("complement(complement(path:4))").unwrap(),
            FamilySpec::Path(4)
        );
    }

    #[test]
    fn induced_prefix_of_triangles() {
        for n3 in 1..6 {
            let g = build(&format!("cluster:0,0,{n3}"));
            for k in 1..=n3 {
                let vs: Vec<usize> = (0..3 * k).collect();
                assert_eq!(g.induced_subgraph(&vs).unwrap(), build(&format!("cluster:0,0,{k}")));
            }
        }
    }

    #[test]
    fn induced_tent_path_is_p4() {
        let t = build("tent:4");
        assert_eq!(t.induced_subgraph(&[0, 1, 2, 3]).unwrap(), build("path:4"));
    }

    #[test]
    fn parser_accepts_whitespace_and_reports_errors() {
        assert_eq!(
            parse_family_spec(" cluster : 1 , 2 ,3 ").unwrap(),
            FamilySpec::Cluster(vec![1, 2, 3])
        );
        assert!(matches!(parse_family_spec("ladder:0"), Err(Error::InvalidSpec(_))));
        assert!(matches!(parse_family_spec("cycle:2"), Err(Error::InvalidSpec(_))));
        assert!(matches!(
            parse_family_spec("path:1,2"),
            Err(Error::SpecParse { pos: 5, .. })
        ));
        assert!(matches!(parse_family_spec("cluster:1,2"), Err(Error::SpecParse { .. })));
        assert!(matches!(
            parse_family_spec("blob:3"),
            Err(Error::SpecParse { pos: 0, .. })
        ));
        assert!(matches!(
            parse_family_spec("path:"),
            Err(Error::SpecParse { pos: 5, .. })
        ));
        assert!(matches!(
            parse_family_spec("path:3)"),
            Err(Error::SpecParse { pos: 6, .. })
        ));
        let u = parse_family_spec("union(path:2; complete:3)").unwrap();
        assert_eq!(u.to_string(), "union(path:2; complete:3)");
        assert_eq!(build_family(&u).unwrap().size(), 4);
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "path:3",
            "cluster:1,0,2,1",
            "multipartite:0,0,3",
            "lforest:2,1",
            "complement(tent:4)",
        ] {
            let spec = parse_family_spec(s).unwrap();
            assert_eq!(spec.to_string(), s);
            assert_eq!(parse_family_spec(&spec.to_string()).unwrap(), spec);
        }
    }
}
