//! Base and strong generating set, built by deterministic Schreier–Sims.

use std::collections::HashSet;

use rand::Rng;

use crate::permcore::Permutation;

#[derive(Debug, Clone)]
pub(crate) struct Level {
    pub point: usize,
    /// Indices into `Bsgs::strong_gens` of the generators fixing all earlier base points.
    pub gens: Vec<usize>,
    pub orbit: Vec<usize>,
    /// `transversal[x]` maps `point` to `x`.
    pub transversal: Vec<Option<Permutation>>,
    pub inverse: Vec<Option<Permutation>>,
    /// (orbit point, generator index) pairs whose Schreier generator is known to sift.
    checked: HashSet<(usize, usize)>,
}

impl Level {
    fn new(point: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        let mut inverse = vec![None; degree];
        transversal[point] = Some(Permutation::identity(degree));
        inverse[point] = Some(Permutation::identity(degree));
        Level {
            point,
            gens: Vec::new(),
            orbit: vec![point],
            transversal,
            inverse,
            checked: HashSet::new(),
        }
    }

    /// Extends the orbit and transversal; existing transversal entries are kept.
    fn extend_orbit(&mut self, strong: &[Permutation]) {
        let mut k = 0;
        while k < self.orbit.len() {
            let x = self.orbit[k];
            for &s in &self.gens {
                let y = strong[s].apply(x);
                if self.transversal[y].is_none() {
                    let u = self.transversal[x].as_ref().unwrap().compose(&strong[s]);
                    self.inverse[y] = Some(u.inverse());
                    self.transversal[y] = Some(u);
                    self.orbit.push(y);
                }
            }
            k += 1;
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Bsgs {
    pub degree: usize,
    pub strong_gens: Vec<Permutation>,
    pub levels: Vec<Level>,
}

impl Bsgs {
    /// Builds a BSGS whose base starts with `prefix` (kept even where the
    /// basic orbit is trivial) and continues with smallest moved points.
    pub fn build(degree: usize, gens: &[Permutation], prefix: &[usize]) -> Self {
        let mut bsgs = Bsgs {
            degree,
            strong_gens: Vec::new(),
            levels: prefix.iter().map(|&p| Level::new(p, degree)).collect(),
        };
        let mut seen = HashSet::new();
        for g in gens {
            if g.is_identity() || !seen.insert(g.clone()) {
                continue;
            }
            if bsgs.levels.iter().all(|l| g.apply(l.point) == l.point) {
                let p = g.smallest_moved_point().unwrap();
                bsgs.levels.push(Level::new(p, degree));
            }
            bsgs.strong_gens.push(g.clone());
        }
        for idx in 0..bsgs.strong_gens.len() {
            let g = &bsgs.strong_gens[idx];
            for l in 0..bsgs.levels.len() {
                bsgs.levels[l].gens.push(idx);
                if g.apply(bsgs.levels[l].point) != bsgs.levels[l].point {
                    break;
                }
            }
        }
        for l in 0..bsgs.levels.len() {
            let (strong, levels) = (&bsgs.strong_gens, &mut bsgs.levels);
            levels[l].extend_orbit(strong);
        }
        if !bsgs.levels.is_empty() {
            bsgs.complete(bsgs.levels.len() - 1);
        }
        bsgs
    }

    fn complete(&mut self, start: usize) {
        let mut i = start as isize;
        while i >= 0 {
            let level = i as usize;
            match self.failing_schreier_generator(level) {
                None => i -= 1,
                Some((h, j)) => {
                    let idx = self.strong_gens.len();
                    if j == self.levels.len() {
                        let p = h.smallest_moved_point().expect("residue is not identity");
                        self.levels.push(Level::new(p, self.degree));
                    }
                    self.strong_gens.push(h);
                    for l in 0..=j {
                        self.levels[l].gens.push(idx);
                    }
                    for l in 0..=j {
                        let (strong, levels) = (&self.strong_gens, &mut self.levels);
                        levels[l].extend_orbit(strong);
                    }
                    i = j as isize;
                }
            }
        }
    }

    fn failing_schreier_generator(&mut self, i: usize) -> Option<(Permutation, usize)> {
        let orbit = self.levels[i].orbit.clone();
        let gens = self.levels[i].gens.clone();
        for &x in &orbit {
            for &s in &gens {
                if self.levels[i].checked.contains(&(x, s)) {
                    continue;
                }
                let sgen = &self.strong_gens[s];
                let y = sgen.apply(x);
                let level = &self.levels[i];
                let schreier = level.transversal[x]
                    .as_ref()
                    .unwrap()
                    .compose(sgen)
                    .compose(level.inverse[y].as_ref().unwrap());
                let (h, j) = self.sift(&schreier, i + 1);
                if !h.is_identity() {
                    return Some((h, j));
                }
                self.levels[i].checked.insert((x, s));
            }
        }
        None
    }

    /// Strips `g` through the levels from `start`; returns the residue and the
    /// level at which stripping stopped (`levels.len()` if it went through).
    pub fn sift(&self, g: &Permutation, start: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let x = h.apply(level.point);
            match &level.inverse[x] {
                Some(inv) => h = h.compose(inv),
                None => return (h, l),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g, 0).0.is_identity()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    /// Generators of the stabiliser of the first `k` base points.
    pub fn level_generators(&self, k: usize) -> Vec<Permutation> {
        match self.levels.get(k) {
            Some(level) => level
                .gens
                .iter()
                .map(|&i| self.strong_gens[i].clone())
                .collect(),
            None => Vec::new(),
        }
    }

    /// BSGS of the pointwise stabiliser of the first `k` base points.
    pub fn suffix(&self, k: usize) -> Bsgs {
        Bsgs {
            degree: self.degree,
            strong_gens: self.strong_gens.clone(),
            levels: self.levels[k..].to_vec(),
        }
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        let mut acc = Permutation::identity(self.degree);
        for level in self.levels.iter().rev() {
            let x = level.orbit[rng.gen_range(0..level.orbit.len())];
            acc = acc.compose(level.transversal[x].as_ref().unwrap());
        }
        acc
    }
}

/// Enumerates group elements in lexicographic order of their base images.
///
/// An element is written `h_{L-1} ... h_1 h_0` with `h_l` a transversal
/// element of level `l`; the image of base point `l` is then the image of
/// `x_l` under the partial product chosen so far, and candidates at each level
/// are visited sorted by that image.
pub struct Elements<'a> {
    bsgs: &'a Bsgs,
    frames: Vec<Frame>,
    started: bool,
}

struct Frame {
    candidates: Vec<usize>,
    pos: usize,
    prefix: Permutation,
}

impl<'a> Elements<'a> {
    pub(crate) fn new(bsgs: &'a Bsgs) -> Self {
        Elements {
            bsgs,
            frames: Vec::new(),
            started: false,
        }
    }

    fn frame(&self, level: usize, prefix: Permutation) -> Frame {
        let mut candidates = self.bsgs.levels[level].orbit.clone();
        candidates.sort_by_key(|&x| prefix.apply(x));
        Frame {
            candidates,
            pos: 0,
            prefix,
        }
    }
}

impl Iterator for Elements<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let depth = self.bsgs.levels.len();
        if !self.started {
            self.started = true;
            let id = Permutation::identity(self.bsgs.degree);
            if depth == 0 {
                return Some(id);
            }
            let f = self.frame(0, id);
            self.frames.push(f);
        }
        loop {
            let level = self.frames.len().checked_sub(1)?;
            let top = self.frames.last_mut().unwrap();
            if top.pos == top.candidates.len() {
                self.frames.pop();
                continue;
            }
            let x = top.candidates[top.pos];
            top.pos += 1;
            let u = self.bsgs.levels[level].transversal[x].as_ref().unwrap();
            let next = u.compose(&top.prefix);
            if level + 1 == depth {
                return Some(next);
            }
            let f = self.frame(level + 1, next);
            self.frames.push(f);
        }
    }
}
