//! Seeded randomized check of every algebraic identity on a given complex.
//!
//! Random cochains take one value per simplex with numerator uniform in
//! [−100, 100] and denominator uniform in [1, 100]. Each property draws from
//! its own ChaCha8 stream derived from the seed, so reports are reproducible
//! and independent of which properties run.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use dec_core::{
    boundary, boundary_chain, cup, d, wedge, wilson_product, Cochain, Scalar, Simplex, SimplicialComplex,
    SimplicialMap, VertexId, WedgeMethod,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::documents::{to_json, CochainDocument, LabeledComplex, Labels};

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub trials: usize,
    pub seed: u64,
    /// Largest cochain degree drawn; defaults to the complex dimension.
    pub max_degree: Option<usize>,
    /// Replaces the wedge under test by the bare cup product. Harness self-test.
    pub corrupt_wedge: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { trials: 50, seed: 0, max_degree: None, corrupt_wedge: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass { cases: usize },
    Skip(&'static str),
    Fail(String),
}

#[derive(Debug, Clone)]
pub struct Row {
    pub property: &'static str,
    pub outcome: Outcome,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub header: String,
    pub rows: Vec<Row>,
}

impl Report {
    pub fn passed(&self) -> bool {
        !self.rows.iter().any(|r| matches!(r.outcome, Outcome::Fail(_)))
    }

    pub fn render(&self, color: bool) -> String {
        let paint = |code: &str, text: &str| {
            if color {
                format!("\x1b[{code}m{text}\x1b[0m")
            } else {
                text.to_owned()
            }
        };
        let mut out = String::new();
        writeln!(out, "{}", self.header).unwrap();
        let (mut pass, mut fail, mut skip) = (0, 0, 0);
        for row in &self.rows {
            match &row.outcome {
                Outcome::Pass { cases } => {
                    pass += 1;
                    writeln!(out, "{}  {:<22} {cases} cases", paint("32", "PASS"), row.property).unwrap();
                }
                Outcome::Skip(why) => {
                    skip += 1;
                    writeln!(out, "{}  {:<22} {why}", paint("33", "SKIP"), row.property).unwrap();
                }
                Outcome::Fail(_) => {
                    fail += 1;
                    writeln!(out, "{}  {:<22} see witness below", paint("31", "FAIL"), row.property).unwrap();
                }
            }
        }
        writeln!(out, "summary: {pass} passed, {fail} failed, {skip} skipped").unwrap();
        for row in &self.rows {
            if let Outcome::Fail(witness) = &row.outcome {
                writeln!(out, "\nwitness for {}:\n{}", row.property, witness.trim_end()).unwrap();
            }
        }
        out
    }
}

type Check = Result<usize, String>;

struct Harness<'a> {
    x: &'a LabeledComplex,
    opts: &'a VerifyOptions,
    max_degree: usize,
}

const METHODS: [WedgeMethod; 3] = [
    WedgeMethod::PermutationSum,
    WedgeMethod::AverageOuterLeft,
    WedgeMethod::AverageOuterRight,
];

pub fn run(x: &LabeledComplex, opts: &VerifyOptions) -> Report {
    let dim = x.complex.dimension();
    let max_degree = opts.max_degree.unwrap_or(dim).min(dim);
    let h = Harness { x, opts, max_degree };
    let counts: Vec<String> = x.complex.counts().iter().map(ToString::to_string).collect();
    let header = format!(
        "verify: dimension {dim}, counts {}, trials {}, seed {}, max degree {max_degree}",
        counts.join("/"),
        opts.trials,
        opts.seed
    );

    type Property<'h> = (&'static str, Option<&'static str>, Box<dyn Fn(&mut ChaCha8Rng) -> Check + 'h>);
    let vacuous_d = (dim < 2).then_some("needs a 2-simplex");
    let vacuous_edge = (dim < 1).then_some("needs an edge");
    let props: Vec<Property> = vec![
        ("boundary-squared", vacuous_d, Box::new(|_| h.boundary_squared())),
        ("d-squared", vacuous_d, Box::new(|r| h.d_squared(r))),
        ("method-equivalence", None, Box::new(|r| h.method_equivalence(r))),
        ("wilson-oracle", None, Box::new(|r| h.wilson_oracle(r))),
        ("anticommutativity", None, Box::new(|r| h.anticommutativity(r))),
        ("leibniz", vacuous_edge, Box::new(|r| h.leibniz(r))),
        ("unit", None, Box::new(|r| h.unit(r))),
        ("bilinearity", None, Box::new(|r| h.bilinearity(r))),
        ("chain-map", vacuous_edge, Box::new(|r| h.chain_map(r))),
        ("naturality-d", vacuous_edge, Box::new(|r| h.naturality_d(r))),
        ("naturality-wedge", None, Box::new(|r| h.naturality_wedge(r))),
        ("functoriality", None, Box::new(|r| h.functoriality(r))),
    ];

    let rows = props
        .into_iter()
        .enumerate()
        .map(|(i, (property, skip, check))| {
            let outcome = match skip {
                Some(why) => Outcome::Skip(why),
                None => {
                    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ i as u64);
                    match check(&mut rng) {
                        Ok(cases) => Outcome::Pass { cases },
                        Err(witness) => Outcome::Fail(witness),
                    }
                }
            };
            Row { property, outcome }
        })
        .collect();
    Report { header, rows }
}

fn random_scalar(rng: &mut impl Rng) -> Scalar {
    Scalar::new(rng.random_range(-100i64..=100), rng.random_range(1i64..=100))
}

fn random_cochain(rng: &mut impl Rng, complex: &SimplicialComplex, degree: usize) -> Cochain {
    let mut c = Cochain::zero(degree);
    for (_, s) in complex.simplices(degree) {
        c.set(s.vertices(), random_scalar(rng)).expect("degree matches");
    }
    c
}

fn first_difference(lhs: &Cochain, rhs: &Cochain) -> Option<Simplex> {
    lhs.values()
        .chain(rhs.values())
        .map(|(s, _)| s)
        .find(|s| lhs.value(s) != rhs.value(s))
        .cloned()
}

/// Restriction of `c` to the faces of `s`, which is all a local identity needs.
fn restrict(c: &Cochain, s: &Simplex) -> Cochain {
    let mut out = Cochain::zero(c.degree());
    if c.degree() <= s.dimension() {
        for face in s.faces(c.degree()) {
            out.set(face.vertices(), c.value(&face)).expect("degree matches");
        }
    }
    out
}

struct Witness<'w> {
    labels: &'w LabeledComplex,
    text: String,
}

impl<'w> Witness<'w> {
    fn new(on: &'w LabeledComplex, what: impl AsRef<str>) -> Self {
        Witness { labels: on, text: format!("{}\n", what.as_ref()) }
    }

    fn mismatch(mut self, s: &Simplex, lhs: &Cochain, rhs: &Cochain) -> Self {
        let at = self.labels.labels.bracket(s.vertices());
        writeln!(self.text, "at {at}: {} != {}", lhs.value(s), rhs.value(s)).unwrap();
        self
    }

    fn input(mut self, name: &str, c: &Cochain, near: &Simplex) -> Self {
        let doc = CochainDocument::from_cochain(&restrict(c, near), self.labels);
        let doc = CochainDocument { values: doc.values.into_iter().filter(|(_, v)| v != "0").collect(), ..doc };
        writeln!(self.text, "{name} = {}", to_json(&doc).trim_end()).unwrap();
        self
    }

    fn finish(self) -> String {
        self.text
    }
}

impl<'a> Harness<'a> {
    fn complex(&self) -> &'a SimplicialComplex {
        &self.x.complex
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        let (dim, max) = (self.complex().dimension(), self.max_degree);
        (0..=max).flat_map(|k| (0..=max).map(move |l| (k, l))).filter(|(k, l)| k + l <= dim).collect()
    }

    fn wedge_under_test(&self, a: &Cochain, b: &Cochain) -> Cochain {
        if self.opts.corrupt_wedge {
            cup(self.complex(), a, b)
        } else {
            wedge(self.complex(), a, b, WedgeMethod::default())
        }
    }

    fn compare(&self, what: String, lhs: &Cochain, rhs: &Cochain, inputs: &[(&str, &Cochain)]) -> Result<(), String> {
        let Some(s) = first_difference(lhs, rhs) else { return Ok(()) };
        let mut w = Witness::new(self.x, what).mismatch(&s, lhs, rhs);
        for (name, c) in inputs {
            w = w.input(name, c, &s);
        }
        Err(w.finish())
    }

    fn boundary_squared(&self) -> Check {
        let x = self.complex();
        let mut cases = 0;
        for k in 2..=x.dimension() {
            for (_, s) in x.simplices(k) {
                let bb = boundary_chain(x, &boundary(x, s).expect("simplex of x")).expect("faces of x");
                if !bb.is_zero() {
                    return Err(format!("boundary of boundary of {} is nonzero", self.x.labels.bracket(s.vertices())));
                }
                cases += 1;
            }
        }
        Ok(cases)
    }

    fn d_squared(&self, rng: &mut ChaCha8Rng) -> Check {
        let x = self.complex();
        let mut cases = 0;
        for k in 0..=self.max_degree.min(x.dimension() - 2) {
            for trial in 0..self.opts.trials {
                let a = random_cochain(rng, x, k);
                let dd = d(x, &d(x, &a));
                self.compare(format!("d(d a) != 0, k={k}, trial {trial}"), &dd, &Cochain::zero(k + 2), &[("a", &a)])?;
                cases += 1;
            }
        }
        Ok(cases)
    }

    fn method_equivalence(&self, rng: &mut ChaCha8Rng) -> Check {
        let x = self.complex();
        let mut cases = 0;
        for (k, l) in self.pairs() {
            for trial in 0..self.opts.trials {
                let a = random_cochain(rng, x, k);
                let b = random_cochain(rng, x, l);
                let reference = wedge(x, &a, &b, WedgeMethod::PermutationSum);
                for m in METHODS {
                    let got = if m == WedgeMethod::default() { self.wedge_under_test(&a, &b) } else { wedge(x, &a, &b, m) };
                    let what = format!("{m:?} != PermutationSum, (k,l)=({k},{l}), trial {trial}");
                    self.compare(what, &got, &reference, &[("a", &a), ("b", &b)])?;
                }
                cases += 1;
            }
        }
        Ok(cases)
    }

    fn wilson_oracle(&self, rng: &mut ChaCha8Rng) -> Check {
        let x = self.complex();
        let mut cases = 0;
        for (k, l) in self.pairs() {
            for trial in 0..self.opts.trials {
                let a = random_cochain(rng, x, k);
                let b = random_cochain(rng, x, l);
                let what = format!("Whitney integral != wedge, (k,l)=({k},{l}), trial {trial}");
                self.compare(what, &wilson_product(x, &a, &b), &self.wedge_under_test(&a, &b), &[("a", &a), ("b", &b)])?;
                cases += 1;
            }
        }
        Ok(cases)
    }

    fn anticommutativity(&self, rng: &mut ChaCha8Rng) -> Check {
        let x = self.complex();
        let mut cases = 0;
        for (k, l) in self.pairs() {
            for trial in 0..self.opts.trials {
                let a = random_cochain(rng, x, k);
                let b = random_cochain(rng, x, l);
                let sign = if k * l % 2 == 0 { Scalar::one() } else { Scalar::from(-1) };
                let what = format!("a^b != (-1)^(kl) b^a, (k,l)=({k},{l}), trial {trial}");
                let lhs = self.wedge_under_test(&a, &b);
                let rhs = self.wedge_under_test(&b, &a).scale(&sign);
                self.compare(what, &lhs, &rhs, &[("a", &a), ("b", &b)])?;
                cases += 1;
            }
        }
        Ok(cases)
    }

    fn leibniz(&self, rng: &mut ChaCha8Rng) -> Check {
        let x = self.complex();
        let mut cases = 0;
        for (k, l) in self.pairs().into_iter().filter(|(k, l)| k + l < x.dimension()) {
            for trial in 0..self.opts.trials {
                let a = random_cochain(rng, x, k);
                let b = random_cochain(rng, x, l);
                let sign = if k % 2 == 0 { Scalar::one() } else { Scalar::from(-1) };
                let lhs = d(x, &self.wedge_under_test(&a, &b));
                let rhs = &self.wedge_under_test(&d(x, &a), &b) + &self.wedge_under_test(&a, &d(x, &b)).scale(&sign);
                let what = format!("Leibniz rule fails, (k,l)=({k},{l}), trial {trial}");
                self.compare(what, &lhs, &rhs, &[("a", &a), ("b", &b)])?;
                cases += 1;
            }
        }
        Ok(cases)
    }

    fn unit(&self, rng: &mut ChaCha8Rng) -> Check {
        let x = self.complex();
        let one = Cochain::constant(x, 0, &Scalar::one());
        let mut cases = 0;
        for l in 0..=self.max_degree {
            for trial in 0..self.opts.trials {
                let b = random_cochain(rng, x, l);
                self.compare(format!("1^b != b, l={l}, trial {trial}"), &self.wedge_under_test(&one, &b), &b, &[("b", &b)])?;
                cases += 1;
            }
        }
        Ok(cases)
    }

    fn bilinearity(&self, rng: &mut ChaCha8Rng) -> Check {
        let x = self.complex();
        let mut cases = 0;
        for (k, l) in self.pairs() {
            for trial in 0..self.opts.trials {
                let a = random_cochain(rng, x, k);
                let a2 = random_cochain(rng, x, k);
                let b = random_cochain(rng, x, l);
                let c = random_scalar(rng);
                let w = |p: &Cochain, q: &Cochain| self.wedge_under_test(p, q);
                let sum = &a + &a2.scale(&c);
                let what = format!("(a + c a2)^b != a^b + c a2^b, (k,l)=({k},{l}), c={c}, trial {trial}");
                self.compare(what, &w(&sum, &b), &(&w(&a, &b) + &w(&a2, &b).scale(&c)), &[("a", &a), ("a2", &a2), ("b", &b)])?;
                let what = format!("b^(c a) != c b^a, (k,l)=({k},{l}), c={c}, trial {trial}");
                self.compare(what, &w(&b, &a.scale(&c)), &w(&b, &a).scale(&c), &[("a", &a), ("b", &b)])?;
                cases += 1;
            }
        }
        Ok(cases)
    }

    /// A random vertex map into the full simplex on `size` fresh vertices;
    /// every such map is simplicial and most of them collapse something.
    fn random_map_into<'t>(&self, rng: &mut ChaCha8Rng, target: &'t SimplicialComplex) -> SimplicialMap<'t>
    where
        'a: 't,
    {
        let images: Vec<VertexId> = target.vertices().collect();
        let vertex_map: BTreeMap<_, _> =
            self.complex().vertices().map(|v| (v, images[rng.random_range(0..images.len())])).collect();
        SimplicialMap::validate(self.complex(), target, vertex_map).expect("any map into a simplex is simplicial")
    }

    fn full_simplex(&self, rng: &mut ChaCha8Rng) -> LabeledComplex {
        let n = rng.random_range(0..=self.complex().dimension().min(4) as u32 + 1);
        let complex = SimplicialComplex::closure(&[(0..=n).map(VertexId).collect::<Vec<_>>()]).expect("nonempty");
        LabeledComplex { complex, labels: Labels::numbered("t", n as usize + 1) }
    }

    fn map_witness(&self, f: &SimplicialMap, y: &LabeledComplex) -> String {
        let pairs: Vec<String> = f
            .vertex_map()
            .iter()
            .map(|(u, v)| format!("{} -> {}", self.x.labels.name(*u), y.labels.name(*v)))
            .collect();
        format!("vertex map: {}", pairs.join(", "))
    }

    fn chain_map(&self, rng: &mut ChaCha8Rng) -> Check {
        let mut cases = 0;
        for _ in 0..self.opts.trials {
            let y = self.full_simplex(rng);
            let f = self.random_map_into(rng, &y.complex);
            for k in 1..=self.complex().dimension() {
                for (_, s) in self.complex().simplices(k) {
                    let lhs = f.pushforward(&boundary(self.complex(), s).expect("simplex of x")).expect("chain of x");
                    let image = f.pushforward_simplex(s).expect("simplex of x");
                    let rhs = if image.is_zero() { dec_core::Chain::zero(k - 1) } else { boundary_chain(&y.complex, &image).expect("chain of y") };
                    if lhs != rhs {
                        return Err(format!("f#(boundary) != boundary(f#) on {}\n{}", self.x.labels.bracket(s.vertices()), self.map_witness(&f, &y)));
                    }
                    cases += 1;
                }
            }
        }
        Ok(cases)
    }

    fn naturality_d(&self, rng: &mut ChaCha8Rng) -> Check {
        let mut cases = 0;
        for trial in 0..self.opts.trials {
            let y = self.full_simplex(rng);
            let f = self.random_map_into(rng, &y.complex);
            for k in 0..=self.max_degree.min(y.complex.dimension()) {
                let a = random_cochain(rng, &y.complex, k);
                let lhs = f.pullback(&d(&y.complex, &a));
                let rhs = d(self.complex(), &f.pullback(&a));
                if let Some(s) = first_difference(&lhs, &rhs) {
                    return Err(format!(
                        "f*(d a) != d(f* a), k={k}, trial {trial}\nat {}: {} != {}\n{}\na = {}",
                        self.x.labels.bracket(s.vertices()),
                        lhs.value(&s),
                        rhs.value(&s),
                        self.map_witness(&f, &y),
                        to_json(&CochainDocument::from_cochain(&a, &y)).trim_end()
                    ));
                }
                cases += 1;
            }
        }
        Ok(cases)
    }

    fn naturality_wedge(&self, rng: &mut ChaCha8Rng) -> Check {
        let mut cases = 0;
        for trial in 0..self.opts.trials {
            let y = self.full_simplex(rng);
            let f = self.random_map_into(rng, &y.complex);
            let dim = y.complex.dimension().min(self.complex().dimension());
            for k in 0..=self.max_degree.min(dim) {
                for l in 0..=(dim - k).min(self.max_degree) {
                    let a = random_cochain(rng, &y.complex, k);
                    let b = random_cochain(rng, &y.complex, l);
                    let lhs = f.pullback(&wedge(&y.complex, &a, &b, WedgeMethod::default()));
                    let rhs = self.wedge_under_test(&f.pullback(&a), &f.pullback(&b));
                    if let Some(s) = first_difference(&lhs, &rhs) {
                        return Err(format!(
                            "f*(a^b) != f*a ^ f*b, (k,l)=({k},{l}), trial {trial}\nat {}: {} != {}\n{}\na = {}\nb = {}",
                            self.x.labels.bracket(s.vertices()),
                            lhs.value(&s),
                            rhs.value(&s),
                            self.map_witness(&f, &y),
                            to_json(&CochainDocument::from_cochain(&a, &y)).trim_end(),
                            to_json(&CochainDocument::from_cochain(&b, &y)).trim_end()
                        ));
                    }
                    cases += 1;
                }
            }
        }
        Ok(cases)
    }

    fn functoriality(&self, rng: &mut ChaCha8Rng) -> Check {
        let mut cases = 0;
        for trial in 0..self.opts.trials {
            let y = self.full_simplex(rng);
            let z = self.full_simplex(rng);
            let f = self.random_map_into(rng, &y.complex);
            let images: Vec<VertexId> = z.complex.vertices().collect();
            let g_map = y.complex.vertices().map(|v| (v, images[rng.random_range(0..images.len())])).collect();
            let g = SimplicialMap::validate(&y.complex, &z.complex, g_map).expect("into a simplex");
            let gf = f.then(&g).map_err(|e| format!("composition rejected: {e}"))?;
            for k in 0..=self.max_degree.min(z.complex.dimension()) {
                let a = random_cochain(rng, &z.complex, k);
                if gf.pullback(&a) != f.pullback(&g.pullback(&a)) {
                    return Err(format!("(g f)* a != f*(g* a), k={k}, trial {trial}\n{}", self.map_witness(&f, &y)));
                }
                let id = SimplicialMap::identity(self.complex());
                let on_x = random_cochain(rng, self.complex(), k.min(self.complex().dimension()));
                if id.pullback(&on_x) != on_x {
                    return Err(format!("identity pullback changed a cochain, trial {trial}"));
                }
                cases += 1;
            }
        }
        Ok(cases)
    }
}
