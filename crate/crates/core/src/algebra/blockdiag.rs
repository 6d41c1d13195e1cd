use crate::field::{Elem, Gf};
use crate::matlin::Mat;

/// Block-diagonal square matrix, stored block by block.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BlockDiag(pub Vec<Mat>);

impl BlockDiag {
    pub fn identity(f: &Gf, dims: &[usize]) -> BlockDiag {
        BlockDiag(dims.iter().map(|&n| Mat::identity(f, n)).collect())
    }

    pub fn zero(f: &Gf, dims: &[usize]) -> BlockDiag {
        BlockDiag(dims.iter().map(|&n| Mat::zero(f, n, n)).collect())
    }

    pub fn scalar(f: &Gf, dims: &[usize], a: Elem) -> BlockDiag {
        BlockDiag(dims.iter().map(|&n| Mat::scalar(f, n, a)).collect())
    }

    pub fn field(&self) -> &Gf {
        self.0[0].field()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.0.iter().map(|m| m.rows()).collect()
    }

    pub fn mul(&self, o: &BlockDiag) -> BlockDiag {
        BlockDiag(self.0.iter().zip(&o.0).map(|(a, b)| a * b).collect())
    }

    pub fn add(&self, o: &BlockDiag) -> BlockDiag {
        BlockDiag(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &BlockDiag) -> BlockDiag {
        BlockDiag(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: Elem) -> BlockDiag {
        BlockDiag(self.0.iter().map(|a| a.scale(c)).collect())
    }

    pub fn neg(&self) -> BlockDiag {
        BlockDiag(self.0.iter().map(|a| -a).collect())
    }

    pub fn map(&self, h: impl Fn(&Mat) -> Mat) -> BlockDiag {
        BlockDiag(self.0.iter().map(h).collect())
    }

    pub fn inverse(&self) -> Option<BlockDiag> {
        self.0.iter().map(|m| m.inverse()).collect::<Option<Vec<_>>>().map(BlockDiag)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|m| m.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|m| m.is_identity())
    }

    pub fn pow(&self, e: u64) -> BlockDiag {
        BlockDiag(self.0.iter().map(|m| m.pow(e)).collect())
    }

    /// `g·x·g⁻¹`.
    pub fn conj(&self, x: &BlockDiag, ginv: &BlockDiag) -> BlockDiag {
        self.mul(x).mul(ginv)
    }

    pub fn trace(&self) -> Elem {
        let f = self.field().clone();
        self.0.iter().fold(0, |acc, m| f.add_e(acc, m.trace()))
    }

    /// Concatenated row-major block data.
    pub fn flatten(&self) -> Vec<Elem> {
        let mut v = Vec::with_capacity(self.0.iter().map(|m| m.rows() * m.rows()).sum());
        for m in &self.0 {
            v.extend_from_slice(m.data());
        }
        v
    }

    pub fn unflatten(f: &Gf, dims: &[usize], v: &[Elem]) -> BlockDiag {
        let mut off = 0;
        BlockDiag(
            dims.iter()
                .map(|&n| {
                    let m = Mat::from_vec(f, n, n, v[off..off + n * n].to_vec());
                    off += n * n;
                    m
                })
                .collect(),
        )
    }

    /// The full `n×n` block-diagonal matrix.
    pub fn to_mat(&self) -> Mat {
        let refs: Vec<&Mat> = self.0.iter().collect();
        Mat::block_diag(self.field(), &refs)
    }

    /// Inverse of `to_mat`: the diagonal blocks of `m`.
    pub fn from_mat(m: &Mat, dims: &[usize]) -> BlockDiag {
        let mut off = 0;
        let mut out = Vec::with_capacity(dims.len());
        for &n in dims {
            out.push(m.submatrix(off, off, n, n));
            off += n;
        }
        BlockDiag(out)
    }

    /// Row vector (concatenated over blocks) times this matrix.
    pub fn vec_mul(&self, v: &[Elem]) -> Vec<Elem> {
        let mut out = Vec::with_capacity(v.len());
        let mut off = 0;
        for m in &self.0 {
            let n = m.rows();
            out.extend(m.vec_mul(&v[off..off + n]));
            off += n;
        }
        out
    }
}

pub fn flat_len(dims: &[usize]) -> usize {
    dims.iter().map(|n| n * n).sum()
}
