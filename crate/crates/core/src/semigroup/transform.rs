use super::FiniteSemigroup;
use crate::error::{Budget, Error, Result};
use std::collections::HashMap;

/// A total map on `{0, …, d-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation {
    map: Vec<u32>,
}

impl Transformation {
    pub fn new(map: Vec<u32>) -> Result<Self> {
        let degree = map.len();
        if degree == 0 {
            return Err(Error::InvalidArgument("transformation of degree 0".into()));
        }
        if let Some(&v) = map.iter().find(|&&v| v as usize >= degree) {
            return Err(Error::BadTransformation { value: v as usize, degree });
        }
        Ok(Transformation { map })
    }

    pub fn identity(degree: usize) -> Self {
        Transformation { map: (0..degree as u32).collect() }
    }

    pub fn constant(degree: usize, value: u32) -> Result<Self> {
        Transformation::new(vec![value; degree])
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn image(&self, x: usize) -> usize {
        self.map[x] as usize
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.map
    }

    /// `self` then `other`: `(f·g)(x) = g(f(x))`.
    pub fn then(&self, other: &Transformation) -> Transformation {
        Transformation { map: self.map.iter().map(|&x| other.map[x as usize]).collect() }
    }
}

impl FiniteSemigroup {
    /// Closes the generators under composition (left-to-right action).
    /// Generators come first in the element order; `generators()` lists
    /// their indices.
    pub fn from_transformations(gens: &[Transformation], budget: &Budget) -> Result<FiniteSemigroup> {
        Self::transformation_closure(gens, budget).map(|(s, _)| s)
    }

    /// Like [`FiniteSemigroup::from_transformations`], also returning the
    /// map realised by each element.
    pub fn transformation_closure(
        gens: &[Transformation],
        budget: &Budget,
    ) -> Result<(FiniteSemigroup, Vec<Transformation>)> {
        let first = gens.first().ok_or(Error::NoGenerators)?;
        let degree = first.degree();
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
        let mut elements: Vec<Transformation> = Vec::new();
        let mut index: HashMap<Transformation, usize> = HashMap::new();
        let mut gen_ids = Vec::new();
        for g in gens {
            let id = *index.entry(g.clone()).or_insert_with(|| {
                elements.push(g.clone());
                elements.len() - 1
            });
            if !gen_ids.contains(&id) {
                gen_ids.push(id);
            }
        }
        let distinct_gens: Vec<Transformation> = gen_ids.iter().map(|&i| elements[i].clone()).collect();
        let mut i = 0;
        while i < elements.len() {
            for g in &distinct_gens {
                let p = elements[i].then(g);
                if !index.contains_key(&p) {
                    if elements.len() >= budget.elements {
                        return Err(Error::ClosureBudgetExceeded(budget.elements));
                    }
                    index.insert(p.clone(), elements.len());
                    elements.push(p);
                }
            }
            i += 1;
        }
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for f in &elements {
            for g in &elements {
                table.push(index[&f.then(g)] as u32);
            }
        }
        let s = FiniteSemigroup::from_parts(n, table, None).detect_identity().with_generators(gen_ids);
        Ok((s, elements))
    }
}
