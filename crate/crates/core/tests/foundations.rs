use langinc::foundations::{kleene, minor, sqsubseteq, try_sqsubseteq, Kleene};
use langinc::regular_orders::nerode_left;
use langinc::{fixtures, word, Error, Word, WordQuasiorder};

#[test]
fn lifting_examples() {
    let subset = |x: &u8, y: &u8| x & !y == 0;
    let empty: [u8; 0] = [];
    assert!(sqsubseteq(&empty, &[1u8], &subset));
    assert!(!sqsubseteq(&[1u8], &empty, &subset));

    let q = nerode_left(&fixtures::fig2_a2());
    let xs: Vec<Word> = ["aa", "ab", "ac", "a", "b", "c"].iter().map(|w| word(w)).collect();
    let ys: Vec<Word> = ["a", "b", "c"].iter().map(|w| word(w)).collect();
    assert!(try_sqsubseteq(&xs, &ys, |u, v| q.leq(u, v)).unwrap());
}

#[test]
fn minor_examples() {
    let subset = |x: &u8, y: &u8| x & !y == 0;
    assert_eq!(minor([5u8], &subset).into_vec(), vec![5]);
    assert!(minor(Vec::<u8>::new(), &subset).is_empty());
    // {q1,q3}, {q3}, {q4} as bit masks.
    let m = minor([0b0101u8, 0b0100, 0b1000], &subset).into_vec();
    assert_eq!(m, vec![0b0100, 0b1000]);
}

#[test]
fn kleene_examples() {
    let (v, stats) = kleene(|a: &u32, b: &u32| Ok(a == b), |x| Ok(*x), 7).unwrap();
    assert_eq!((v, stats.iterations), (7, 1));
    let (v, stats) = kleene(|a: &u32, b: &u32| Ok(a <= b), |x| Ok((*x + 1).min(4)), 0).unwrap();
    assert_eq!((v, stats.iterations), (4, 5));
}

#[test]
fn kleene_cap_is_reported() {
    let r = Kleene::new().cap(Some(3)).run(|_: &u32, _: &u32| Ok(false), |x| Ok(x + 1), 0);
    assert_eq!(r.unwrap_err(), Error::IterationCap(3));
}

#[test]
fn kleene_result_is_a_postfixpoint() {
    let f = |x: &Vec<u8>| Ok(x.iter().map(|&b| (b | 1) << 1 & 0x3f).chain([1]).collect::<Vec<u8>>());
    let le = |a: &u8, b: &u8| a & !b == 0;
    let conv = |fx: &Vec<u8>, x: &Vec<u8>| Ok(sqsubseteq(fx, x, &le));
    let (v, _) = kleene(conv, f, vec![]).unwrap();
    assert!(sqsubseteq(&f(&v).unwrap(), &v, &le));
}
