use super::{QOp, RmatError, SparseROp};
use crate::ring::{LaurentPoly, Regime};

fn poly(s: &str) -> LaurentPoly {
    LaurentPoly::parse(Regime::Quantum, s).expect("valid literal")
}

/// The constant R-matrix of case `i`, transcribed component by component.
pub fn quantum_r(case: u8) -> Result<QOp, RmatError> {
    if !(1..=4).contains(&case) {
        return Err(RmatError::BadCase(case));
    }
    let mut e: Vec<([u8; 4], LaurentPoly)> = Vec::new();
    let mut put = |keys: &[[u8; 4]], s: &str| {
        let v = poly(s);
        e.extend(keys.iter().map(|k| (*k, v.clone())));
    };
    put(&[[1, 1, 1, 1]], "1");
    put(&[[2, 2, 2, 2], [3, 3, 3, 3]], "-p^2 * Q^-2");
    put(&[[4, 4, 4, 4]], "p^4");
    put(&[[1, 2, 2, 1], [1, 3, 3, 1], [2, 1, 1, 2], [3, 1, 1, 3]], "p * Q^-1");
    put(&[[2, 4, 4, 2], [3, 4, 4, 3], [4, 2, 2, 4], [4, 3, 3, 4]], "p^3 * Q^-1");
    put(&[[1, 4, 4, 1], [4, 1, 1, 4]], "p^2 * Q^-2");
    put(&[[2, 3, 3, 2], [3, 2, 2, 3]], "-p^2");
    // −pQ̄(pQ̄ − p̄Q), p³Q̄(pQ − p̄Q̄), p²(pQ̄ − p̄Q)(pQ − p̄Q̄)
    let low = "-p^2 * Q^-2 + 1";
    let high = "p^4 - p^2 * Q^-2";
    match case {
        1 => {
            put(&[[2, 1, 2, 1], [3, 1, 3, 1]], low);
            put(&[[4, 2, 4, 2], [4, 3, 4, 3]], high);
            put(&[[4, 1, 4, 1]], "p^4 - p^2 * Q^2 - p^2 * Q^-2 + 1");
            put(&[[3, 2, 3, 2]], "p^2 * Q^2 - p^2 * Q^-2");
            put(&[[4, 1, 2, 3], [2, 3, 4, 1]], "-p^2 * Q^-1 * Y");
            put(&[[3, 2, 4, 1], [4, 1, 3, 2]], "p^2 * Q * Y");
        }
        2 => {
            put(&[[2, 1, 2, 1]], low);
            put(&[[4, 3, 4, 3]], high);
            put(&[[4, 1, 2, 3], [2, 3, 4, 1]], "-p^2 * Q^-1 * Y");
        }
        3 => put(&[[3, 2, 3, 2]], "p^2 * Q^2 - p^2 * Q^-2"),
        _ => {}
    }
    Ok(SparseROp::from_entries(Regime::Quantum, e))
}

/// The distinct eigenvalues listed for each case.
pub fn tabulated_eigenvalues(case: u8) -> Result<Vec<LaurentPoly>, RmatError> {
    let base = ["1", "-p^2 * Q^-2", "p^4"];
    let pm = ["p * Q^-1", "-p * Q^-1", "p^3 * Q^-1", "-p^3 * Q^-1"];
    let list: Vec<&str> = match case {
        1 => base.to_vec(),
        2 => base.iter().chain(pm.iter()).copied().collect(),
        3 => base.iter().chain(pm.iter()).chain(["p^2 * Q^-2", "p^2 * Q^2"].iter()).copied().collect(),
        4 => base.iter().chain(pm.iter()).chain(["p^2 * Q^-2", "p^2", "-p^2"].iter()).copied().collect(),
        _ => return Err(RmatError::BadCase(case)),
    };
    Ok(list.into_iter().map(poly).collect())
}
