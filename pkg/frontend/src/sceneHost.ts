/** Lazy rendering: at most one mounted scene, previous unmounted first. */

export type Unmount = () => void;

export class SceneHost {
    private mountedKey: string | null = null;
    private unmountFn: Unmount | null = null;

    get mounted(): string | null {
        return this.mountedKey;
    }

    /** Unmounts whatever is showing, then mounts the new scene. */
    show(key: string, mount: () => Unmount): void {
        this.clear();
        this.unmountFn = mount();
        this.mountedKey = key;
    }

    clear(): void {
        if (this.unmountFn) {
            this.unmountFn();
            this.unmountFn = null;
            this.mountedKey = null;
        }
    }
}
