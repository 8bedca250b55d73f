mod common;

use std::collections::BTreeMap;

use common::{closure, element_set, Images};
use fusionkit::corpusio::{
    direct_product, load_group, make_named, named_group, resolve_group, write_group, GroupSpec,
    SubgroupGenerator, GROUP_NAMES,
};
use fusionkit::Error;
use proptest::prelude::*;

fn images_of(degree: usize) -> impl Strategy<Value = Images> {
    Just((0..degree).collect::<Images>()).prop_shuffle()
}

/// A spec with up to three generators and subgroups given either by index
/// or by products of two generators.
fn spec() -> impl Strategy<Value = GroupSpec> {
    (1usize..=6)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(images_of(n), 1..=3)))
        .prop_flat_map(|(n, gens)| {
            let k = gens.len();
            let entry = prop_oneof![
                (0..k).prop_map(SubgroupGenerator::Index),
                (0..k, 0..k).prop_map(|(a, b)| SubgroupGenerator::Images(Vec::from([a, b]))),
            ];
            let subs = prop::collection::btree_map(
                "[A-Z][a-z0-9]{0,3}",
                prop::collection::vec(entry, 0..=2),
                0..=3,
            );
            (Just(n), Just(gens), subs)
        })
        .prop_map(|(n, gens, subs)| {
            // swap the placeholder pairs for the actual product of generators
            let named_subgroups = subs
                .into_iter()
                .map(|(name, entries)| {
                    let entries = entries
                        .into_iter()
                        .map(|e| match e {
                            SubgroupGenerator::Images(ab) => {
                                SubgroupGenerator::Images(common::mul(&gens[ab[0]], &gens[ab[1]]))
                            }
                            idx => idx,
                        })
                        .collect();
                    (name, entries)
                })
                .collect();
            GroupSpec {
                name: "random".into(),
                degree: n,
                generators: gens,
                named_subgroups,
            }
        })
}

fn resolved_sets(spec: &GroupSpec) -> BTreeMap<String, std::collections::BTreeSet<Images>> {
    let r = spec.resolve().unwrap();
    r.subgroups
        .iter()
        .map(|(k, h)| (k.clone(), element_set(h)))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn write_then_load_round_trips(spec in spec()) {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g.json");
        write_group(&path, &spec).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        prop_assert_eq!(text.trim_end().lines().count(), 1);
        let loaded = load_group(&path).unwrap();
        prop_assert_eq!(&loaded.spec, &spec);
        prop_assert_eq!(loaded.group.order(), closure(spec.degree, &spec.generators).len() as u64);
        prop_assert_eq!(resolved_sets(&loaded.spec), resolved_sets(&spec));
    }

    #[test]
    fn from_group_preserves_subgroups(spec in spec()) {
        let r = spec.resolve().unwrap();
        let subs: Vec<(&str, &fusionkit::PermGroup)> =
            r.subgroups.iter().map(|(k, h)| (k.as_str(), h)).collect();
        let again = GroupSpec::from_group("copy", &r.group, &subs);
        let reparsed = GroupSpec::parse(&again.to_line()).unwrap();
        prop_assert_eq!(element_set(&reparsed.resolve().unwrap().group), element_set(&r.group));
        prop_assert_eq!(resolved_sets(&reparsed), resolved_sets(&spec));
    }
}

fn data_file() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data/s3xs3.json")
}

#[test]
fn shipped_file_matches_built_in_group() {
    let loaded = load_group(data_file()).unwrap();
    assert_eq!(loaded.group.order(), 36);
    let s3 = make_named("symmetric", &[3]).unwrap();
    let product = direct_product(&s3, &s3);
    assert_eq!(element_set(&loaded.group), element_set(&product));
    let built_in = named_group("s3xs3").unwrap();
    for (name, h) in &loaded.subgroups {
        assert_eq!(
            element_set(h),
            element_set(built_in.subgroup(name).unwrap()),
            "{name}"
        );
    }
    let orders: BTreeMap<&str, u64> = loaded
        .subgroups
        .iter()
        .map(|(k, h)| (k.as_str(), h.order()))
        .collect();
    assert_eq!(orders["G1"], 6);
    assert_eq!(orders["S"], 9);
    assert_eq!(orders["H"], 6);
    assert_eq!(orders["R"], 2);
}

#[test]
fn built_in_names_resolve() {
    for name in GROUP_NAMES {
        let r = resolve_group(name).unwrap();
        assert!(r.subgroup("G").unwrap().same_elements(&r.group), "{name}");
    }
    assert_eq!(resolve_group("symmetric(4)").unwrap().group.order(), 24);
    assert_eq!(
        resolve_group("elementary_abelian(3,2)")
            .unwrap()
            .group
            .order(),
        9
    );
    assert_eq!(
        resolve_group(data_file().to_str().unwrap())
            .unwrap()
            .group
            .order(),
        36
    );
}

#[test]
fn rejects_bad_files() {
    let bad_json = GroupSpec::parse("{\"name\":\"x\",\n\"degree\":3,").unwrap_err();
    assert!(
        matches!(bad_json, Error::Parse { line: 2, .. }),
        "{bad_json}"
    );

    let unknown = GroupSpec::parse(r#"{"name":"x","degree":2,"generators":[],"extra":1}"#);
    assert!(matches!(unknown, Err(Error::Parse { .. })));

    let not_perm = GroupSpec::parse(r#"{"name":"x","degree":3,"generators":[[0,0,1]]}"#)
        .unwrap()
        .resolve()
        .unwrap_err();
    assert!(
        matches!(&not_perm, Error::NotBijection { detail, .. } if detail.contains("generator 0"))
    );

    let short = GroupSpec::parse(r#"{"name":"x","degree":3,"generators":[[1,0]]}"#)
        .unwrap()
        .resolve();
    assert!(matches!(short, Err(Error::NotBijection { .. })));

    let missing =
        GroupSpec::parse(r#"{"name":"x","degree":3,"generators":[[1,0,2]],"subgroups":{"H":[4]}}"#)
            .unwrap()
            .resolve()
            .unwrap_err();
    assert!(matches!(&missing, Error::Contract(m) if m.contains("missing generator index 4")));

    let outside = GroupSpec::parse(
        r#"{"name":"x","degree":3,"generators":[[1,0,2]],"subgroups":{"H":[[0,2,1]]}}"#,
    )
    .unwrap()
    .resolve();
    assert!(matches!(outside, Err(Error::NotSubgroup(_))));

    let absent = load_group("/nonexistent/group.json");
    assert!(matches!(absent, Err(Error::Io { .. })));

    assert!(matches!(
        resolve_group("no_such_group"),
        Err(Error::UnknownFamily(_))
    ));
    assert!(named_group("s3").unwrap().subgroup("Q8").is_err());
}
