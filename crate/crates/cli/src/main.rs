fn main() {
    println!("cdc");
}
