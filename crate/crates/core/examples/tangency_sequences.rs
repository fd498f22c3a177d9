// Tangency sequences and the coefficients built from them.

use severi::seqcomb::{enumerate_seq_compositions, enumerate_seqs_with_weight, seq_binomial, seq_multinomial};
use severi::TangencySeq;

fn main() {
    let a: TangencySeq = "2,0,1".parse().unwrap();
    println!("a = ({a}): |a| = {}, Ia = {}, I^a = {}", a.size(), a.weight(), a.weight_product());

    let b = TangencySeq::from([1, 0, 1]);
    println!("C(a, b) = {}", seq_binomial(&a, &b));

    let parts = [TangencySeq::from([1]), TangencySeq::from([1]), TangencySeq::from([0, 0, 1])];
    println!("multinomial(a; 1, 1, e3) = {}", seq_multinomial(&a, &parts).unwrap());

    println!("sequences of weight 4:");
    for s in enumerate_seqs_with_weight(4) {
        println!("  ({s})");
    }

    let splits: Vec<Vec<TangencySeq>> = enumerate_seq_compositions(&a, 2).collect();
    println!("{} ordered ways to split a into two parts", splits.len());
}
