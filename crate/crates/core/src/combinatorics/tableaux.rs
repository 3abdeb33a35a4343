use super::{Composition, CombinatoricsError};

/// Number of standard Young tableaux of shape `λ`; the hook-length formula
/// and a direct enumeration are both evaluated and must agree.
pub fn standard_tableaux_count(lam: &Composition) -> Result<usize, CombinatoricsError> {
    let hook = hook_length_count(lam)?;
    let enumerated = standard_tableaux_enumerated(lam)?;
    assert_eq!(hook, enumerated, "hook length formula disagrees with enumeration for {lam}");
    Ok(hook)
}

pub fn hook_length_count(lam: &Composition) -> Result<usize, CombinatoricsError> {
    let conj = lam.conjugate()?;
    let parts = lam.parts();
    let mut hooks: u128 = 1;
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row {
            hooks *= (row - j + conj.parts()[j] - i - 1) as u128;
        }
    }
    let fact: u128 = (1..=lam.total() as u128).product();
    Ok((fact / hooks) as usize)
}

/// Counts fillings by removing the largest entry from a corner, recursively.
pub fn standard_tableaux_enumerated(lam: &Composition) -> Result<usize, CombinatoricsError> {
    if !lam.is_partition() {
        return Err(CombinatoricsError::NotAPartition(lam.clone()));
    }
    fn count(shape: &mut Vec<usize>) -> usize {
        if shape.iter().all(|&x| x == 0) {
            return 1;
        }
        let mut total = 0;
        for i in 0..shape.len() {
            let below = shape.get(i + 1).copied().unwrap_or(0);
            if shape[i] > below {
                shape[i] -= 1;
                total += count(shape);
                shape[i] += 1;
            }
        }
        total
    }
    Ok(count(&mut lam.parts().to_vec()))
}
