//! Minimal dense complex tensor with the two primitives the column sweep
//! needs: axis permutation and pairwise contraction (`tensordot`).

use num_complex::Complex64;

/// Dense tensor, row-major over `dims`.
#[derive(Clone, Debug)]
pub(crate) struct Tensor {
    pub dims: Vec<usize>,
    pub data: Vec<Complex64>,
}

impl Tensor {
    pub fn new(dims: Vec<usize>, data: Vec<Complex64>) -> Self {
        debug_assert_eq!(dims.iter().product::<usize>(), data.len());
        Tensor { dims, data }
    }

    /// Rank-0 multiplicative unit, reshaped to `axes` size-1 dims.
    pub fn unit(axes: usize) -> Self {
        Tensor {
            dims: vec![1; axes],
            data: vec![Complex64::new(1.0, 0.0)],
        }
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    /// Row-major strides of `dims`.
    fn strides(dims: &[usize]) -> Vec<usize> {
        let mut s = vec![1usize; dims.len()];
        for k in (0..dims.len().saturating_sub(1)).rev() {
            s[k] = s[k + 1] * dims[k + 1];
        }
        s
    }

    /// Reorders axes so that new axis `k` is old axis `perm[k]`.
    pub fn permute(&self, perm: &[usize]) -> Tensor {
        debug_assert_eq!(perm.len(), self.dims.len());
        let new_dims: Vec<usize> = perm.iter().map(|&k| self.dims[k]).collect();
        let old_strides = Self::strides(&self.dims);
        // Stride of the input when walking the output linearly.
        let walk: Vec<usize> = perm.iter().map(|&k| old_strides[k]).collect();
        let mut data = vec![Complex64::default(); self.data.len()];
        let mut idx = vec![0usize; new_dims.len()];
        let mut src = 0usize;
        for slot in data.iter_mut() {
            *slot = self.data[src];
            // odometer increment
            for ax in (0..new_dims.len()).rev() {
                idx[ax] += 1;
                src += walk[ax];
                if idx[ax] < new_dims[ax] {
                    break;
                }
                src -= walk[ax] * new_dims[ax];
                idx[ax] = 0;
            }
        }
        Tensor::new(new_dims, data)
    }

    /// Reinterprets the flat data with new dims (same total length).
    pub fn reshape(mut self, dims: Vec<usize>) -> Tensor {
        debug_assert_eq!(dims.iter().product::<usize>(), self.data.len());
        self.dims = dims;
        self
    }

    /// Contracts `pairs` of axes (`self` axis, `other` axis). Result axes are
    /// the remaining axes of `self` followed by the remaining axes of `other`.
    pub fn tensordot(&self, other: &Tensor, pairs: &[(usize, usize)]) -> Tensor {
        let a_con: Vec<usize> = pairs.iter().map(|p| p.0).collect();
        let b_con: Vec<usize> = pairs.iter().map(|p| p.1).collect();
        for &(i, j) in pairs {
            debug_assert_eq!(self.dims[i], other.dims[j], "contracted axis mismatch");
        }
        let a_keep: Vec<usize> = (0..self.dims.len()).filter(|k| !a_con.contains(k)).collect();
        let b_keep: Vec<usize> = (0..other.dims.len()).filter(|k| !b_con.contains(k)).collect();

        let m: usize = a_keep.iter().map(|&k| self.dims[k]).product();
        let kk: usize = a_con.iter().map(|&k| self.dims[k]).product();
        let n: usize = b_keep.iter().map(|&k| other.dims[k]).product();

        let a_perm: Vec<usize> = a_keep.iter().chain(a_con.iter()).copied().collect();
        let b_perm: Vec<usize> = b_con.iter().chain(b_keep.iter()).copied().collect();
        let a = self.permute(&a_perm);
        let b = other.permute(&b_perm);

        let mut out = vec![Complex64::default(); m * n];
        // row-major (m×k)·(k×n), ikj order
        for i in 0..m {
            let arow = &a.data[i * kk..(i + 1) * kk];
            let orow = &mut out[i * n..(i + 1) * n];
            for (l, &av) in arow.iter().enumerate() {
                if av == Complex64::default() {
                    continue;
                }
                let brow = &b.data[l * n..(l + 1) * n];
                for (o, &bv) in orow.iter_mut().zip(brow.iter()) {
                    *o += av * bv;
                }
            }
        }

        let mut dims: Vec<usize> = a_keep.iter().map(|&k| self.dims[k]).collect();
        dims.extend(b_keep.iter().map(|&k| other.dims[k]));
        Tensor::new(dims, out)
    }
}
