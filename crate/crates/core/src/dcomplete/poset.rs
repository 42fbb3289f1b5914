use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::qtcore::VarLabel;
use crate::tableaux::{Cell, Diagram, Shape};

/// Finite poset given by its cover relation, with the order relation
/// precomputed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    /// `uppers[e]`: elements covering `e`.
    uppers: Vec<Vec<usize>>,
    /// `lowers[e]`: elements covered by `e`.
    lowers: Vec<Vec<usize>>,
    /// `leq[a][b]` iff `a <= b`.
    leq: Vec<Vec<bool>>,
}

impl Poset {
    /// Builds from `(lower, upper)` cover pairs, rejecting cycles and pairs
    /// that are not covers (implied by transitivity).
    pub fn new(names: Vec<String>, covers: &[(usize, usize)]) -> Result<Self> {
        let n = names.len();
        let mut uppers = vec![Vec::new(); n];
        let mut lowers = vec![Vec::new(); n];
        for &(a, b) in covers {
            if a >= n || b >= n || a == b {
                return Err(Error::InvalidSpec(format!("bad cover pair ({a}, {b})")));
            }
            if !uppers[a].contains(&b) {
                uppers[a].push(b);
                lowers[b].push(a);
            }
        }
        for v in uppers.iter_mut().chain(lowers.iter_mut()) {
            v.sort_unstable();
        }
        // topological order from the top down (Kahn on upper covers)
        let mut pending: Vec<usize> = uppers.iter().map(Vec::len).collect();
        let mut stack: Vec<usize> = (0..n).filter(|&e| pending[e] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(e) = stack.pop() {
            order.push(e);
            for &l in &lowers[e] {
                pending[l] -= 1;
                if pending[l] == 0 {
                    stack.push(l);
                }
            }
        }
        if order.len() != n {
            return Err(Error::InvalidSpec("the cover relation has a cycle".into()));
        }
        let mut leq = vec![vec![false; n]; n];
        for &e in &order {
            leq[e][e] = true;
            for &u in &uppers[e] {
                let row = leq[u].clone();
                for (x, &above) in row.iter().enumerate() {
                    if above {
                        leq[e][x] = true;
                    }
                }
            }
        }
        for (a, ups) in uppers.iter().enumerate() {
            for &b in ups {
                if ups.iter().any(|&c| c != b && leq[c][b]) {
                    return Err(Error::InvalidSpec(format!(
                        "({}, {}) is implied by transitivity, not a cover",
                        names[a], names[b]
                    )));
                }
            }
        }
        Ok(Self {
            names,
            uppers,
            lowers,
            leq,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, e: usize) -> &str {
        &self.names[e]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn uppers(&self, e: usize) -> &[usize] {
        &self.uppers[e]
    }

    pub fn lowers(&self, e: usize) -> &[usize] {
        &self.lowers[e]
    }

    pub fn all_uppers(&self) -> Vec<Vec<usize>> {
        self.uppers.clone()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq[a][b] || self.leq[b][a]
    }

    pub fn covers(&self, upper: usize, lower: usize) -> bool {
        self.uppers[lower].contains(&upper)
    }

    /// Cover pairs `(lower, upper)` in index order.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|a| self.uppers[a].iter().map(move |&b| (a, b)))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&e| self.uppers[e].is_empty()).collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(e) = stack.pop() {
            for &n in self.uppers[e].iter().chain(&self.lowers[e]) {
                if !seen[n] {
                    seen[n] = true;
                    stack.push(n);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// `[w, v] = {x : w <= x <= v}` in index order.
    pub fn interval(&self, w: usize, v: usize) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.leq[w][x] && self.leq[x][v]).collect()
    }

    /// `{x : x <= v}`.
    pub fn down_set(&self, v: usize) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.leq[x][v]).collect()
    }

    /// Induced subposet on `elements` (covers of the subposet, not of `self`).
    pub fn induced(&self, elements: &[usize]) -> Poset {
        let covers: Vec<(usize, usize)> = elements
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| {
                elements.iter().enumerate().filter_map(move |(j, &b)| {
                    let direct = self.lt(a, b)
                        && !elements.iter().any(|&c| c != a && c != b && self.lt(a, c) && self.lt(c, b));
                    direct.then_some((i, j))
                })
            })
            .collect();
        let names = elements.iter().map(|&e| self.names[e].clone()).collect();
        Poset::new(names, &covers).expect("subposets of posets are posets")
    }
}

/// Description of a poset to build, as accepted on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PosetSpec {
    Shape(crate::tableaux::Partition),
    Shifted {
        mu: crate::tableaux::StrictPartition,
        two_color: bool,
    },
    Tree(String),
    Dk1(u32),
}

/// A poset together with display labels for its top-tree elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledPoset {
    pub poset: Poset,
    pub top_labels: BTreeMap<usize, VarLabel>,
}

pub fn cell_name(c: Cell) -> String {
    format!("({},{})", c.i, c.j)
}

/// Poset on the cells of a diagram with `(1,1)` as maximum; element `k` is
/// the diagram's `k`-th cell.
pub fn diagram_poset(d: &Diagram) -> Poset {
    let names = d.cells().iter().map(|&c| cell_name(c)).collect();
    let covers: Vec<(usize, usize)> = d
        .upper_neighbors()
        .into_iter()
        .enumerate()
        .flat_map(|(e, ups)| ups.into_iter().map(move |u| (e, u)))
        .collect();
    Poset::new(names, &covers).expect("diagrams are posets")
}

fn diagram_labels(d: &Diagram, two_color: bool) -> BTreeMap<usize, VarLabel> {
    let mut labels = BTreeMap::new();
    for (k, c) in d.cells().iter().enumerate() {
        let label = match d.shape() {
            Shape::Normal(_) if c.i == 1 || c.j == 1 => Some(VarLabel::Int(c.content())),
            Shape::Shifted(_) if c.i == 1 => Some(VarLabel::Int(c.content())),
            Shape::Shifted(_) if c.i == 2 && c.j == 2 => {
                Some(if two_color { VarLabel::ZeroPrime } else { VarLabel::Int(0) })
            }
            _ => None,
        };
        if let Some(l) = label {
            labels.insert(k, l);
        }
    }
    labels
}

/// Parses `(a(b)(c(d)))`: a node is `(name child*)`, the outermost node is
/// the root.
pub fn parse_tree(spec: &str) -> Result<Poset> {
    let chars: Vec<char> = spec.chars().filter(|c| !c.is_whitespace()).collect();
    let mut names = Vec::new();
    let mut covers = Vec::new();
    let mut pos = 0;
    fn node(
        chars: &[char],
        pos: &mut usize,
        names: &mut Vec<String>,
        covers: &mut Vec<(usize, usize)>,
    ) -> Result<usize> {
        if chars.get(*pos) != Some(&'(') {
            return Err(Error::Parse(format!("expected '(' at offset {pos}")));
        }
        *pos += 1;
        let start = *pos;
        while chars.get(*pos).is_some_and(|c| c.is_alphanumeric() || *c == '_') {
            *pos += 1;
        }
        if *pos == start {
            return Err(Error::Parse(format!("expected a node name at offset {start}")));
        }
        let name: String = chars[start..*pos].iter().collect();
        if names.contains(&name) {
            return Err(Error::Parse(format!("duplicate node name {name}")));
        }
        let id = names.len();
        names.push(name);
        while chars.get(*pos) == Some(&'(') {
            let child = node(chars, pos, names, covers)?;
            covers.push((child, id));
        }
        if chars.get(*pos) != Some(&')') {
            return Err(Error::Parse(format!("expected ')' at offset {pos}")));
        }
        *pos += 1;
        Ok(id)
    }
    node(&chars, &mut pos, &mut names, &mut covers)?;
    if pos != chars.len() {
        return Err(Error::Parse(format!("trailing input at offset {pos}")));
    }
    Poset::new(names, &covers)
}

/// Random rooted tree on `n` nodes (each node after the first picks a
/// parent among the earlier ones) in the text form read by [`parse_tree`].
pub fn random_tree_spec(seed: u64, n: usize) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let parents: Vec<usize> = (1..n.max(1)).map(|i| rng.gen_range(0..i)).collect();
    fn render(v: usize, parents: &[usize], out: &mut String) {
        out.push('(');
        out.push_str(&format!("n{v}"));
        for (i, &p) in parents.iter().enumerate() {
            if p == v {
                render(i + 1, parents, out);
            }
        }
        out.push(')');
    }
    let mut out = String::new();
    render(0, &parents, &mut out);
    out
}

/// The double-tailed diamond `d_k(1)`: a chain `b1 < … < b{k-2}`, two sides
/// `x`, `y` covering `b{k-2}`, and a chain `t1 < … < t{k-2}` with `t1`
/// covering both sides.
pub fn dk1(k: u32) -> Result<Poset> {
    if k < 3 {
        return Err(Error::InvalidSpec(format!("d_k(1) needs k >= 3, got {k}")));
    }
    let m = (k - 2) as usize;
    let mut names: Vec<String> = (1..=m).map(|i| format!("b{i}")).collect();
    names.push("x".into());
    names.push("y".into());
    names.extend((1..=m).map(|i| format!("t{i}")));
    let mut covers: Vec<(usize, usize)> = (0..m - 1).map(|i| (i, i + 1)).collect();
    let (x, y, t1) = (m, m + 1, m + 2);
    covers.extend([(m - 1, x), (m - 1, y), (x, t1), (y, t1)]);
    covers.extend((0..m - 1).map(|i| (t1 + i, t1 + i + 1)));
    Poset::new(names, &covers)
}

/// `d_k(1)` with its maximum removed (`k >= 4`).
pub fn dk1_minus(k: u32) -> Result<Poset> {
    let full = dk1(k)?;
    let keep: Vec<usize> = (0..full.len() - 1).collect();
    Ok(full.induced(&keep))
}

fn id_labels(elements: impl Iterator<Item = usize>) -> BTreeMap<usize, VarLabel> {
    elements.map(|e| (e, VarLabel::Id(e as u32))).collect()
}

/// Builds the poset and the top-tree labels for a spec. Trees and `d_k(1)`
/// get one label `#k` per element of the top tree.
pub fn build(spec: &PosetSpec) -> Result<LabeledPoset> {
    match spec {
        PosetSpec::Shape(lambda) => {
            let d = Diagram::normal(lambda);
            Ok(LabeledPoset {
                poset: diagram_poset(&d),
                top_labels: diagram_labels(&d, false),
            })
        }
        PosetSpec::Shifted { mu, two_color } => {
            let d = Diagram::shifted(mu);
            Ok(LabeledPoset {
                poset: diagram_poset(&d),
                top_labels: diagram_labels(&d, *two_color),
            })
        }
        PosetSpec::Tree(text) => {
            let poset = parse_tree(text)?;
            let top_labels = id_labels(0..poset.len());
            Ok(LabeledPoset { poset, top_labels })
        }
        PosetSpec::Dk1(k) => {
            let poset = dk1(*k)?;
            let tree = super::structure::top_tree(&poset)?;
            let top_labels = id_labels(tree.into_iter());
            Ok(LabeledPoset { poset, top_labels })
        }
    }
}

fn field<'a>(v: &'a Value, key: &str) -> Option<&'a Value> {
    v.as_object().and_then(|o| o.get(key))
}

fn element_name(v: &Value, ctx: &str) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        _ => Err(Error::Parse(format!("{ctx}: expected a string or number id"))),
    }
}

/// Reads the JSON poset format
/// `{"elements": [...], "covers": [[lower, upper], ...], "top_tree_colors": {id: label}}`.
pub fn parse_poset_json(text: &str) -> Result<LabeledPoset> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    let elements = field(&v, "elements")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("field \"elements\": expected an array".into()))?;
    let names: Vec<String> = elements
        .iter()
        .enumerate()
        .map(|(i, e)| element_name(e, &format!("elements[{i}]")))
        .collect::<Result<_>>()?;
    let lookup = |name: &str, ctx: &str| {
        names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::Parse(format!("{ctx}: unknown element {name:?}")))
    };
    let covers_v = field(&v, "covers")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("field \"covers\": expected an array".into()))?;
    let mut covers = Vec::new();
    for (i, c) in covers_v.iter().enumerate() {
        let ctx = format!("covers[{i}]");
        let pair = c
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| Error::Parse(format!("{ctx}: expected [lower, upper]")))?;
        let lo = lookup(&element_name(&pair[0], &ctx)?, &ctx)?;
        let hi = lookup(&element_name(&pair[1], &ctx)?, &ctx)?;
        covers.push((lo, hi));
    }
    let poset = Poset::new(names.clone(), &covers)?;
    let top_labels = match field(&v, "top_tree_colors") {
        None | Some(Value::Null) => {
            let tree = super::structure::top_tree(&poset)?;
            id_labels(tree.into_iter())
        }
        Some(Value::Object(map)) => {
            let mut labels = BTreeMap::new();
            for (k, l) in map {
                let ctx = format!("top_tree_colors[{k:?}]");
                let e = lookup(k, &ctx)?;
                let text = l
                    .as_str()
                    .ok_or_else(|| Error::Parse(format!("{ctx}: expected a label string")))?;
                labels.insert(e, VarLabel::parse(text).map_err(|e| Error::Parse(format!("{ctx}: {e}")))?);
            }
            labels
        }
        Some(_) => return Err(Error::Parse("field \"top_tree_colors\": expected an object".into())),
    };
    Ok(LabeledPoset { poset, top_labels })
}

pub fn poset_to_json(p: &LabeledPoset) -> Value {
    let names = p.poset.names();
    let covers: Vec<Value> = p
        .poset
        .cover_pairs()
        .into_iter()
        .map(|(a, b)| json!([names[a], names[b]]))
        .collect();
    let colors: serde_json::Map<String, Value> = p
        .top_labels
        .iter()
        .map(|(&e, l)| (names[e].clone(), Value::String(l.to_string())))
        .collect();
    json!({
        "elements": names,
        "covers": covers,
        "top_tree_colors": colors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::{Partition, StrictPartition};

    #[test]
    fn order_relation() {
        let p = dk1(4).unwrap();
        assert_eq!(p.len(), 6);
        let (b1, x, y, t2) = (0, 2, 3, 5);
        assert!(p.lt(b1, t2));
        assert!(!p.comparable(x, y));
        assert_eq!(p.maximal_elements(), vec![t2]);
        assert_eq!(p.interval(b1, t2).len(), 6);
        assert!(p.is_connected());
    }

    #[test]
    fn rejects_bad_relations() {
        let names = vec!["a".to_string(), "b".to_string(), "c".to_string()];
        assert!(Poset::new(names.clone(), &[(0, 1), (1, 0)]).is_err());
        assert!(Poset::new(names, &[(0, 1), (1, 2), (0, 2)]).is_err());
    }

    #[test]
    fn trees() {
        let t = parse_tree("(a(b)(c(d)))").unwrap();
        assert_eq!(t.names(), ["a", "b", "c", "d"]);
        assert!(t.covers(0, 1) && t.covers(2, 3) && t.lt(3, 0));
        assert!(parse_tree("(a(b)").is_err());
        assert!(parse_tree("(a)(b)").is_err());
        assert!(parse_tree("(a(a))").is_err());
        for seed in 0..10 {
            let spec = random_tree_spec(seed, 7);
            let t = parse_tree(&spec).unwrap();
            assert_eq!(t.len(), 7);
            assert_eq!(t.maximal_elements().len(), 1);
        }
        assert_eq!(random_tree_spec(3, 5), random_tree_spec(3, 5));
    }

    #[test]
    fn diagram_posets() {
        let d = Diagram::shifted(&StrictPartition::new(vec![3, 1]).unwrap());
        let p = diagram_poset(&d);
        assert_eq!(p.names(), ["(1,1)", "(1,2)", "(1,3)", "(2,2)"]);
        assert_eq!(p.maximal_elements(), vec![0]);
        assert!(p.covers(1, 3));
        let l = build(&PosetSpec::Shape(Partition::new(vec![2, 2]).unwrap())).unwrap();
        assert_eq!(l.top_labels.len(), 3);
    }

    #[test]
    fn json_round_trip() {
        let p = build(&PosetSpec::Dk1(4)).unwrap();
        let text = serde_json::to_string(&poset_to_json(&p)).unwrap();
        let back = parse_poset_json(&text).unwrap();
        assert_eq!(back, p);
        let text2 = serde_json::to_string(&poset_to_json(&back)).unwrap();
        assert_eq!(text, text2);
        let err = parse_poset_json(r#"{"elements":["a"],"covers":[["a","z"]]}"#).unwrap_err();
        assert!(err.to_string().contains("covers[0]"));
        assert!(parse_poset_json("{\"elements\": [").unwrap_err().to_string().contains("line 1"));
    }
}
