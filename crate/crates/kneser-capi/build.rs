fn main() {
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
    println!("cargo:rerun-if-env-changed=KNESER_CAPI_WRITE_HEADER");

    let crate_dir = std::env::var("CARGO_MANIFEST_DIR").expect("CARGO_MANIFEST_DIR is set");
    let out_dir = std::env::var("OUT_DIR").expect("OUT_DIR is set");
    let config = cbindgen::Config::from_file("cbindgen.toml").expect("cbindgen.toml parses");

    let bindings = cbindgen::Builder::new()
        .with_crate(&crate_dir)
        .with_config(config)
        .generate()
        .expect("header generation");
    bindings.write_to_file(std::path::Path::new(&out_dir).join("kneser.h"));

    // The checked-in copy under include/ is refreshed only on request, so a
    // plain build never dirties the tree.
    if std::env::var("KNESER_CAPI_WRITE_HEADER").as_deref() == Ok("1") {
        bindings.write_to_file(std::path::Path::new(&crate_dir).join("include/kneser.h"));
    }
}
