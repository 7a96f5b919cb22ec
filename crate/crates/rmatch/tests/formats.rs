use rmatch::io::{format_tree, read_tree_file, TreeFileError};
use rmatch::report::{Format, PathSeriesReport, Report, SearchReportDto};
use rmatch_core::extremal::search_extremal;
use rmatch_core::series::path_count_series;
use rmatch_core::{enumerate_trees, CanonicalCode};

#[test]
fn every_small_tree_survives_a_file_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    for n in 1..=9 {
        for (i, t) in enumerate_trees(n).unwrap().enumerate() {
            let p = dir.path().join(format!("t{n}_{i}.txt"));
            std::fs::write(&p, format_tree(&t)).unwrap();
            let back = read_tree_file(&p).unwrap();
            assert_eq!(CanonicalCode::of(&back), CanonicalCode::of(&t));
        }
    }
}

#[test]
fn unreadable_file_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let err = read_tree_file(&dir.path().join("absent")).unwrap_err();
    assert!(matches!(err, TreeFileError::Read { .. }));
}

#[test]
fn exact_counts_are_never_rounded() {
    let series = path_count_series(1, 400).unwrap();
    let rep = PathSeriesReport::new(1, series.values());
    let json: serde_json::Value = serde_json::from_str(&rep.render(Format::Json)).unwrap();
    let last = json["values"][400].as_str().unwrap();
    assert_eq!(last, series.get(400).unwrap().to_string());
    assert!(last.len() > 80 && last.bytes().all(|b| b.is_ascii_digit()));
    assert!(rep.render(Format::Csv).ends_with(&format!("400,{last}\n")));
}

#[test]
fn search_report_renders_in_all_formats() {
    let dto = SearchReportDto::from(&search_extremal(3, 5).unwrap());
    assert_eq!(
        dto.render(Format::Csv),
        "n,r,max,min,path_count,path_is_max,trees_examined\n5,3,5,5,5,true,3\n"
    );
    assert!(dto.render(Format::Text).contains("3 trees"));
    let v: serde_json::Value = serde_json::from_str(&dto.render(Format::Json)).unwrap();
    assert_eq!(v["argmin_codes"].as_array().unwrap().len(), 3);
}
