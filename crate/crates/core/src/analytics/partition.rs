use num_rational::Rational64;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::conllu::{Document, Section};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("split ratios must be positive and sum to 1")]
    BadRatios,
    #[error("section {section} has {size} sentences, fewer than the {needed} needed for dev and test")]
    TooSmall {
        section: String,
        size: usize,
        needed: usize,
    },
}

/// Train/dev/test proportions, held exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitRatios {
    train: Rational64,
    dev: Rational64,
    test: Rational64,
}

impl Default for SplitRatios {
    fn default() -> Self {
        SplitRatios {
            train: Rational64::new(8, 10),
            dev: Rational64::new(1, 10),
            test: Rational64::new(1, 10),
        }
    }
}

impl SplitRatios {
    pub fn new(train: Rational64, dev: Rational64, test: Rational64) -> Result<Self, PartitionError> {
        let positive = [train, dev, test].iter().all(|r| *r > Rational64::zero());
        if !positive || train + dev + test != Rational64::one() {
            return Err(PartitionError::BadRatios);
        }
        Ok(SplitRatios { train, dev, test })
    }

    /// Ratios from decimals such as `0.8, 0.1, 0.1`, rounded to millionths.
    pub fn from_f64(train: f64, dev: f64, test: f64) -> Result<Self, PartitionError> {
        let exact = |x: f64| {
            if !x.is_finite() || x <= 0.0 || x >= 1.0 {
                return None;
            }
            Some(Rational64::new((x * 1e6).round() as i64, 1_000_000))
        };
        match (exact(train), exact(dev), exact(test)) {
            (Some(a), Some(b), Some(c)) => Self::new(a, b, c),
            _ => Err(PartitionError::BadRatios),
        }
    }

    pub fn train(&self) -> Rational64 {
        self.train
    }

    fn ceil_share(n: usize, r: Rational64) -> usize {
        let (p, q) = (*r.numer() as i128, *r.denom() as i128);
        ((n as i128 * p + q - 1) / q) as usize
    }

    /// `(train, dev, test)` sizes for `n` sentences: dev and test are
    /// rounded up, train takes the rest.
    pub fn sizes(&self, n: usize) -> Option<(usize, usize, usize)> {
        let dev = Self::ceil_share(n, self.dev);
        let test = Self::ceil_share(n, self.test);
        (dev + test <= n).then(|| (n - dev - test, dev, test))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SectionSplit {
    pub section: Option<Section>,
    pub total: usize,
    pub train: usize,
    pub dev: usize,
    pub test: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Partition {
    pub train: Document,
    pub dev: Document,
    pub test: Document,
    pub sections: Vec<SectionSplit>,
}

/// Split every section separately and concatenate the parts in input order.
///
/// Within a section, sentences are assigned by a shuffle seeded with
/// `seed` and keep their original relative order in each part.
pub fn partition(
    sections: &[Document],
    ratios: &SplitRatios,
    seed: u64,
) -> Result<Partition, PartitionError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Partition {
        train: Document::default(),
        dev: Document::default(),
        test: Document::default(),
        sections: Vec::new(),
    };
    for (i, section) in sections.iter().enumerate() {
        let n = section.len();
        let (train, dev, test) = ratios.sizes(n).ok_or_else(|| PartitionError::TooSmall {
            section: section
                .section
                .map_or_else(|| format!("#{}", i + 1), |s| s.to_string()),
            size: n,
            needed: SplitRatios::ceil_share(n, ratios.dev) + SplitRatios::ceil_share(n, ratios.test),
        })?;
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let mut parts = [
            order[..train].to_vec(),
            order[train..train + dev].to_vec(),
            order[train + dev..].to_vec(),
        ];
        for (part, doc) in parts
            .iter_mut()
            .zip([&mut out.train, &mut out.dev, &mut out.test])
        {
            part.sort_unstable();
            doc.sentences
                .extend(part.iter().map(|&j| section.sentences[j].clone()));
        }
        out.sections.push(SectionSplit {
            section: section.section,
            total: n,
            train,
            dev,
            test,
        });
    }
    Ok(out)
}
