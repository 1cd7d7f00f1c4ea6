//! Encodes a tree into its record code, shows the bonsai decomposition the
//! code is built from, and decodes it back.
//!
//! cargo run --example record_code

use weary::codec::{classify, decode, encode, RecordCode};
use weary::decomposition::{bonsai_decomposition, reassemble};
use weary::tree::CayleyTree;

fn main() -> weary::Result<()> {
    let tree = CayleyTree::from_parents(vec![7, 5, 7, 2, 0, 1, 0, 5, 1])?;
    println!("tree      {tree}");
    println!("records   {:?}", tree.records());

    let d = bonsai_decomposition(&tree)?;
    for b in &d.bonsais {
        println!(
            "bonsai    root {} labels {:?}",
            b.root(),
            b.labels().collect::<Vec<_>>()
        );
    }
    println!("attached  {:?}", d.attachments);
    assert_eq!(reassemble(&d)?, tree);

    let code = encode(&tree)?;
    println!("code      {code}");
    // the record split can be read off the code alone
    println!("split     {:?}", classify(&code));
    assert_eq!(decode(&code), tree);

    // every code is some tree: decode a few arbitrary ones
    for entries in [vec![0, 0], vec![3, 3], vec![1, 1]] {
        let code = RecordCode::new(3, entries)?;
        let t = decode(&code);
        println!("{code:<9} -> {t}");
        assert_eq!(encode(&t)?, code);
    }
    Ok(())
}
