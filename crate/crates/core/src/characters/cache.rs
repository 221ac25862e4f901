//! Memoised KR and stabilized characters.
//!
//! Normalized characters of KR modules depend on the spectral parameter only
//! through a shift, so they are computed once at `x = 0` per
//! (type, node, order, height bound, budget) and shifted on demand.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::character::TruncatedCharacter;
use crate::cartan::LieType;

#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) enum Key {
    Kr {
        ty: LieType,
        node: usize,
        k: u32,
        bound: Option<u32>,
        budget: usize,
    },
    Stable {
        ty: LieType,
        node: usize,
        bound: u32,
        budget: usize,
        ceiling: u32,
    },
}

type Store = Mutex<HashMap<Key, Arc<(TruncatedCharacter, u32)>>>;

fn store() -> &'static Store {
    static STORE: OnceLock<Store> = OnceLock::new();
    STORE.get_or_init(|| Mutex::new(HashMap::new()))
}

pub(crate) fn get(key: &Key) -> Option<Arc<(TruncatedCharacter, u32)>> {
    store().lock().ok()?.get(key).cloned()
}

pub(crate) fn put(key: Key, value: (TruncatedCharacter, u32)) -> Arc<(TruncatedCharacter, u32)> {
    let value = Arc::new(value);
    if let Ok(mut s) = store().lock() {
        s.entry(key).or_insert_with(|| value.clone());
    }
    value
}
