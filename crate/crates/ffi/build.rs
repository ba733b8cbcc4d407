fn main() {
    let crate_dir = std::env::var("CARGO_MANIFEST_DIR").expect("manifest dir");
    cbindgen::Builder::new()
        .with_crate(&crate_dir)
        .with_language(cbindgen::Language::C)
        .with_include_guard("SPECIAL_COCYCLES_H")
        .generate()
        .expect("Unable to generate bindings")
        .write_to_file(format!("{crate_dir}/include/special_cocycles.h"));
}
