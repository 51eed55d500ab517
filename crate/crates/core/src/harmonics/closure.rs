use std::collections::VecDeque;

use super::space::GradedSpace;
use super::xpoly::{vandermonde, Row, XPoly};
use super::HarmonicsError;

/// Smallest tri-graded space containing `Δ_n(x)` and closed under every partial
/// derivative and every `E_uv^(k)`.
pub fn closure_space(n: usize) -> Result<GradedSpace, HarmonicsError> {
    closure_of(n, &[vandermonde(n, Row::X)])
}

/// Operator closure of a list of homogeneous seeds.
pub fn closure_of(n: usize, seeds: &[XPoly]) -> Result<GradedSpace, HarmonicsError> {
    let mut space = GradedSpace::new(n, false);
    let mut queue = VecDeque::new();
    for s in seeds {
        if space.insert(s)? {
            queue.push_back(s.clone());
        }
    }
    while let Some(v) = queue.pop_front() {
        let mut images = Vec::new();
        for row in Row::ALL {
            for j in 0..n {
                images.push(v.differentiate(row, j, 1));
            }
        }
        for u in Row::ALL {
            for w in Row::ALL {
                if u == w {
                    continue;
                }
                for k in 1..=v.max_row_exponent(w) {
                    images.push(v.e_op_apply(u, w, k)?);
                }
            }
        }
        for img in images {
            if !img.is_zero() && space.insert(&img)? {
                queue.push_back(img);
            }
        }
    }
    Ok(space)
}
