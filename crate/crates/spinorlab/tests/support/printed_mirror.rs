//! The published three-qubit mirror dictionary, shared by the embed tests and the acceptance runner.

use std::collections::BTreeMap;

use spinorlab::embed::{mirror_table, EvenAmp, OddAmp};
use spinorlab::fock::perm_sign;

/// One printed dictionary entry, with `Z` indices in the printed order.
fn printed(out: EvenAmp, sign: i64, input: OddAmp) -> (EvenAmp, (bool, OddAmp)) {
    let input_sorted = match input {
        OddAmp::Z(i, j, k) => {
            let odd = perm_sign(&[i, j, k]).unwrap();
            let mut s = [i, j, k];
            s.sort_unstable();
            return (out, ((sign < 0) != odd, OddAmp::Z(s[0], s[1], s[2])));
        }
        other => other,
    };
    (out, (sign < 0, input_sorted))
}

/// The published dictionary (modes 4, 5, 6 are the barred ones).
pub fn printed_table() -> BTreeMap<EvenAmp, (bool, OddAmp)> {
    use EvenAmp::{Eta, Xi, X, Y};
    use OddAmp::{U, W, Z};
    [
        printed(X(1, 2), 1, U(3)),
        printed(X(1, 3), -1, U(2)),
        printed(X(2, 3), 1, U(1)),
        printed(X(1, 4), 1, Z(1, 5, 6)),
        printed(X(1, 5), 1, Z(1, 6, 4)),
        printed(X(1, 6), 1, Z(1, 4, 5)),
        printed(X(2, 4), 1, Z(2, 5, 6)),
        printed(X(2, 5), 1, Z(2, 6, 4)),
        printed(X(2, 6), 1, Z(2, 4, 5)),
        printed(X(3, 4), 1, Z(3, 5, 6)),
        printed(X(3, 5), 1, Z(3, 6, 4)),
        printed(X(3, 6), 1, Z(3, 4, 5)),
        printed(X(4, 5), 1, W(6)),
        printed(X(4, 6), -1, W(5)),
        printed(X(5, 6), 1, W(4)),
        printed(Y(1, 2), -1, W(3)),
        printed(Y(1, 3), 1, W(2)),
        printed(Y(2, 3), -1, W(1)),
        printed(Y(1, 4), -1, Z(4, 2, 3)),
        printed(Y(1, 5), -1, Z(5, 2, 3)),
        printed(Y(1, 6), -1, Z(6, 2, 3)),
        printed(Y(2, 4), -1, Z(4, 3, 1)),
        printed(Y(2, 5), -1, Z(5, 3, 1)),
        printed(Y(2, 6), -1, Z(6, 3, 1)),
        printed(Y(3, 4), -1, Z(4, 1, 2)),
        printed(Y(3, 5), -1, Z(5, 1, 2)),
        printed(Y(3, 6), -1, Z(6, 1, 2)),
        printed(Y(4, 5), -1, U(6)),
        printed(Y(4, 6), 1, U(5)),
        printed(Y(5, 6), -1, U(4)),
        printed(Xi, 1, Z(4, 5, 6)),
        printed(Eta, -1, Z(1, 2, 3)),
    ]
    .into_iter()
    .collect()
}

/// Entries where the generated table and the printed one disagree.
pub fn printed_mismatches() -> Vec<String> {
    let book = printed_table();
    mirror_table()
        .iter()
        .filter(|e| book.get(&e.output) != Some(&(e.negative, e.input)))
        .map(|e| {
            let (neg, inp) = book[&e.output];
            format!(
                "{e}   (printed: {} = {}{inp})",
                e.output,
                if neg { "-" } else { "" }
            )
        })
        .collect()
}
