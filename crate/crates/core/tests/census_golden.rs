//! The census for small edge counts is frozen; any change to generation or
//! canonical codes shows up here.

use arcconn::enumerate::reduced_multigraphs;

#[test]
fn census_matches_golden_file() {
    let golden = include_str!("golden/census.txt");
    let mut expected: Vec<(usize, String)> = golden
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let (k, code) = l.split_once(' ').unwrap();
            (k.parse().unwrap(), code.to_string())
        })
        .collect();
    expected.sort();
    let mut actual = Vec::new();
    for k in 1..=5 {
        for r in reduced_multigraphs(k).unwrap() {
            actual.push((k, r.code.to_hex()));
        }
    }
    actual.sort();
    assert_eq!(actual, expected);
    let sizes: Vec<usize> = (1..=5).map(|k| expected.iter().filter(|e| e.0 == k).count()).collect();
    assert_eq!(sizes, [2, 2, 6, 14, 39]);
}
