fn main() {
    println!("mrvote");
}
