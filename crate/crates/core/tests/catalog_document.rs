//! The shipped catalog document must stay in sync with the in-code data.

use std::path::Path;

#[test]
fn shipped_catalog_json_matches_the_code() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/catalog.json");
    let shipped = std::fs::read_to_string(&path).expect("docs/catalog.json present");
    let generated = nichols_cft::catalog::catalog_json();
    assert_eq!(
        shipped.trim(),
        generated.trim(),
        "docs/catalog.json is stale; regenerate with `nichols-cft catalog export`"
    );
}
