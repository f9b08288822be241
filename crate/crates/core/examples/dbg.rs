fn main() {
    use renyi_core::bigfloat::BigFloat;
    for v in [0.0f64, 1.0, -1.0, 0.1, 1e300, -1e-300, 123456.789] {
        let b = BigFloat::from_f64(v);
        println!("{v:e} -> {:e} eq={}", b.to_f64(), b.to_f64() == v);
    }
    let tiny = BigFloat::new(num_bigint::BigInt::from(1), -1033);
    println!("tiny = {}", tiny.sci_string(4));
    println!("one  = {}", BigFloat::from_f64(1.0).sci_string(3));
}
