use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenusError {
    #[error("a double cover of P^1 needs an even, nonzero number of branch points (got {0})")]
    BadBranchCount(usize),
    #[error("ramification index {0} is impossible for a double cover")]
    BadIndex(u32),
}

/// Genus of a connected double cover C → ℙ¹ from its ramification indices,
/// via 2g(C) − 2 = 2(0 − 2) + Σ(eₚ − 1).
pub fn riemann_hurwitz_genus(ramification_indices: &[u32]) -> Result<u32, GenusError> {
    if let Some(&e) = ramification_indices.iter().find(|&&e| e != 2) {
        return Err(GenusError::BadIndex(e));
    }
    let count = ramification_indices.len();
    if count == 0 || count % 2 == 1 {
        return Err(GenusError::BadBranchCount(count));
    }
    let two_g_minus_2 = -4 + ramification_indices.iter().map(|&e| e as i64 - 1).sum::<i64>();
    Ok(((two_g_minus_2 + 2) / 2) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(riemann_hurwitz_genus(&[2, 2]), Ok(0));
        assert_eq!(riemann_hurwitz_genus(&[2, 2, 2, 2]), Ok(1));
        assert_eq!(riemann_hurwitz_genus(&[2; 12]), Ok(5));
        assert_eq!(riemann_hurwitz_genus(&[2]), Err(GenusError::BadBranchCount(1)));
        assert_eq!(riemann_hurwitz_genus(&[]), Err(GenusError::BadBranchCount(0)));
        assert_eq!(riemann_hurwitz_genus(&[2, 3]), Err(GenusError::BadIndex(3)));
    }
}
