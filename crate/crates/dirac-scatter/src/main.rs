fn main() {
    println!("dirac-scatter");
}
