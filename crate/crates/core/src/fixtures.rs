//! Named small graphs used throughout the tests and the CLI examples.

use crate::graph::Graph;

fn letters(n: usize) -> Vec<String> {
    assert!(n <= 26);
    (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

/// `K_n` on `a, b, ..`.
pub fn complete(n: usize) -> Graph {
    let l = letters(n);
    let refs: Vec<&str> = l.iter().map(String::as_str).collect();
    Graph::complete(&refs).unwrap()
}

/// The edgeless graph `D_n` on `a, b, ..`.
pub fn discrete(n: usize) -> Graph {
    let l = letters(n);
    let refs: Vec<&str> = l.iter().map(String::as_str).collect();
    Graph::discrete(&refs).unwrap()
}

/// The path `a–b–c`.
pub fn path3() -> Graph {
    Graph::new(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap()
}

/// The seven-vertex graph on `f, u, n, m, a, t, h` with ten edges: a
/// triangle `fun`, a four-cycle `math`, and the three edges `an`, `mu`, `au`
/// joining them.
pub fn funmath() -> Graph {
    Graph::new(
        ["f", "u", "n", "m", "a", "t", "h"],
        [
            ("f", "u"),
            ("f", "n"),
            ("u", "n"),
            ("m", "a"),
            ("a", "t"),
            ("t", "h"),
            ("m", "h"),
            ("a", "n"),
            ("m", "u"),
            ("a", "u"),
        ],
    )
    .unwrap()
}
