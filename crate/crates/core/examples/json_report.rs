use unichar::verification::verify_prop_fq;

fn main() {
    let report = verify_prop_fq(2, 3);
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
}
